#include <doctest.h>

#include <cmath>

#include <hurwitz/errors.hpp>
#include <hurwitz/numerics.hpp>
#include <hurwitz/quadrature.hpp>

#include "support.hpp"

using namespace hurwitz;
using test_support::abs_err;
using test_support::rel_err;

namespace {

QuadratureSpec spec_for(QuadratureSpec::Method m) {
    QuadratureSpec s;
    s.method = m;
    return s;
}

const QuadratureSpec::Method kMethods[] = {QuadratureSpec::Method::double_exponential,
                                           QuadratureSpec::Method::adaptive_subdivision};

}  // namespace

TEST_CASE("unit interval examples") {
    for (const auto m : kMethods) {
        const QuadratureSpec spec = spec_for(m);
        CHECK(abs_err(integrate_unit_interval(LineIntegrand([](double) { return Complex(1.0); }), spec).value, 1.0) < 1e-12);
        const auto sq = integrate_unit_interval(LineIntegrand([](double t) { return Complex(1.0 / std::sqrt(t)); }), spec);
        CHECK(abs_err(sq.value, 2.0) < 1e-10);
        const Complex s = -2.0;
        const auto poly = integrate_unit_interval(
            UnitIntegrand([&](double, double omt) { return complex_pow(Complex(omt, 0.0), -s); }), spec);
        CHECK(abs_err(poly.value, 1.0 / 3.0) < 1e-12);
    }
}

TEST_CASE("polynomials up to degree 10 integrate exactly") {
    for (const auto m : kMethods) {
        for (int deg = 0; deg <= 10; ++deg) {
            const auto r = integrate_unit_interval(
                LineIntegrand([deg](double t) {
                    double acc = 0.0;
                    for (int k = 0; k <= deg; ++k) acc += (k + 1) * std::pow(t, k);
                    return Complex(acc);
                }),
                spec_for(m));
            CHECK(abs_err(r.value, static_cast<double>(deg + 1)) <= 1e-12);
        }
    }
}

TEST_CASE("reported bound covers the actual error") {
    const QuadratureSpec spec;
    const auto r = integrate_unit_interval(
        LineIntegrand([](double t) { return Complex(std::pow(t, -0.75) * std::cos(t), std::log(t)); }), spec);
    // int_0^1 log t = -1
    CHECK(std::abs(r.value.imag() + 1.0) <= std::max(r.error_bound, 1e-12));
    CHECK(r.error_bound <= std::max(spec.target_abs_tol, spec.target_rel_tol * std::abs(r.value)));
    CHECK(r.evaluations > 0);
}

TEST_CASE("endpoint singularity at t = 1 through the complement argument") {
    // int_0^1 (1-t)^(-0.9) dt = 10
    const auto r = integrate_unit_interval(
        UnitIntegrand([](double, double omt) { return Complex(std::pow(omt, -0.9)); }), QuadratureSpec{});
    CHECK(abs_err(r.value, 10.0) < 1e-9);
}

TEST_CASE("semi-infinite examples") {
    for (const auto m : kMethods) {
        const QuadratureSpec spec = spec_for(m);
        CHECK(abs_err(integrate_semi_infinite([](double u) { return Complex(std::exp(-u)); }, spec).value, 1.0) < 1e-12);
        CHECK(abs_err(integrate_semi_infinite([](double u) { return Complex(u * std::exp(-2.0 * u)); }, spec).value, 0.25) < 1e-12);
        // e^-u (1+u)^-2 integrates to 1 - e Gamma(0, 1)
        const auto r = integrate_semi_infinite([](double u) { return Complex(std::exp(-u) / ((1.0 + u) * (1.0 + u))); }, spec);
        CHECK(abs_err(r.value, 1.0 - std::exp(1.0) * upper_incomplete_gamma(0.0, 1.0)) < 1e-10);
    }
}

TEST_CASE("semi-infinite with algebraic endpoint behaviour and complex values") {
    const auto r = integrate_semi_infinite(
        [](double u) { return complex_pow(Complex(u, 0.0), Complex(-0.5, 0.3)) * std::exp(-u); }, QuadratureSpec{});
    CHECK(rel_err(r.value, gamma(Complex(0.5, 0.3))) < 1e-10);
    // algebraic decay u^-2 beyond 1
    const auto alg = integrate_semi_infinite([](double u) { return Complex(1.0 / ((1.0 + u) * (1.0 + u))); }, QuadratureSpec{});
    CHECK(abs_err(alg.value, 1.0) < 1e-9);
}

TEST_CASE("non-decaying integrand is flagged") {
    CHECK_THROWS_AS(integrate_semi_infinite([](double) { return Complex(1.0); }, QuadratureSpec{}), DivergenceSuspected);
}

TEST_CASE("unreachable tolerance reports the best estimate") {
    QuadratureSpec spec;
    spec.max_level = 2;
    spec.target_abs_tol = 1e-300;
    spec.target_rel_tol = 1e-300;
    try {
        integrate_unit_interval(LineIntegrand([](double t) { return Complex(std::pow(t, -0.5)); }), spec);
        FAIL("expected ToleranceNotMet");
    } catch (const ToleranceNotMet& e) {
        CHECK(std::abs(e.estimate() - 2.0) < 1e-2);
        CHECK(e.achieved_bound() > 0.0);
    }
}

TEST_CASE("spec validation") {
    QuadratureSpec spec;
    spec.max_level = 16;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.max_level = 0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.max_level = 5;
    spec.target_abs_tol = 0.0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.target_abs_tol = 1e-10;
    spec.target_rel_tol = -1.0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
}
