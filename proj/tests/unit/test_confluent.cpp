#include <doctest.h>

#include <boost/math/special_functions/erf.hpp>
#include <cmath>

#include <hurwitz/confluent.hpp>
#include <hurwitz/errors.hpp>
#include <hurwitz/verify.hpp>

#include "support.hpp"

using namespace hurwitz;
using test_support::abs_err;
using test_support::rel_err;

namespace {

const double kE = std::exp(1.0);

ConfluentParams integral_only() {
    ConfluentParams p;
    p.u_route = ConfluentParams::URoute::laplace_integral;
    return p;
}

// Brute-force Kummer series with a fixed number of terms.
Complex kummer_brute(Complex a, Complex g, Complex x, int terms) {
    Complex sum = 0.0;
    Complex term = 1.0;
    for (int n = 0; n < terms; ++n) {
        sum += term;
        term *= (a + static_cast<double>(n)) * x / ((g + static_cast<double>(n)) * (n + 1.0));
    }
    return sum;
}

}  // namespace

TEST_CASE("Kummer series examples") {
    CHECK(kummer_m(Complex(0.3, 1.0), Complex(-1.5, 0.2), 0.0) == Complex(1.0, 0.0));
    CHECK(abs_err(kummer_m(Complex(0.7, -0.4), Complex(0.7, -0.4), 1.0), kE) < 1e-15);
    CHECK(abs_err(kummer_m(1.0, 2.0, 1.0), kE - 1.0) < 1e-15);
    CHECK(abs_err(kummer_brute(1.0, 2.0, 1.0, 60), kE - 1.0) < 1e-15);
    const Complex x(1.5, -2.0);
    CHECK(rel_err(kummer_m(1.0, 2.0, x), (std::exp(x) - 1.0) / x) < 1e-14);
    CHECK(rel_err(kummer_m(Complex(0.4, 0.3), Complex(-2.5, 1.0), x),
                  kummer_brute(Complex(0.4, 0.3), Complex(-2.5, 1.0), x, 200)) < 1e-13);
}

TEST_CASE("Kummer series terminates for negative integer alpha") {
    // F(-2, g; x) = 1 - 2x/g + x^2/(g(g+1))
    const Complex g(0.5, 0.25);
    const Complex x(3.0, 1.0);
    CHECK(rel_err(kummer_m(-2.0, g, x), 1.0 - 2.0 * x / g + x * x / (g * (g + 1.0))) < 1e-14);
}

TEST_CASE("Kummer series errors") {
    CHECK_THROWS_AS(kummer_m(1.0, -2.0, 1.0), PoleError);
    CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), PoleError);
    ConfluentParams p;
    p.series_cap = 5;
    try {
        kummer_m(1.0, 1.5, 30.0, p);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(std::abs(e.partial())));
        CHECK(e.last_term() > 0.0);
    }
    ConfluentParams bad;
    bad.series_cap = 100001;
    CHECK_THROWS_AS(kummer_m(1.0, 1.5, 1.0, bad), DomainError);
}

TEST_CASE("Tricomi U by the Laplace integral") {
    const Complex e_e1 = kE * upper_incomplete_gamma(0.0, 1.0);
    CHECK(rel_err(tricomi_u_integral(1.0, 1.0, 1.0), e_e1) < 1e-9);
    CHECK(abs_err(tricomi_u_integral(1.0, 2.0, 2.0), 0.5) < 1e-12);
    // alpha = 2, gamma = 1, x = 1 against adaptive subdivision with a tight target
    ConfluentParams fine;
    fine.quad.method = QuadratureSpec::Method::adaptive_subdivision;
    fine.quad.target_abs_tol = 1e-14;
    fine.quad.target_rel_tol = 1e-14;
    fine.quad.max_level = 15;
    CHECK(rel_err(tricomi_u_integral(2.0, 1.0, 1.0), tricomi_u_integral(2.0, 1.0, 1.0, fine)) < 1e-9);
    CHECK_THROWS_AS(tricomi_u_integral(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(tricomi_u_integral(Complex(-0.5, 1.0), 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(tricomi_u_integral(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("Tricomi U closed forms") {
    // U(a, a+1; x) = x^-a and U(1/2, 1/2; x) = sqrt(pi) e^x erfc(sqrt x)
    for (const Complex x : {Complex(2.0, 0.0), Complex(0.7, 1.5), Complex(0.0, -3.0)}) {
        for (const Complex a : {Complex(0.5, 0.0), Complex(1.5, -0.5)}) {
            CHECK(rel_err(tricomi_u(a, a + 1.0, x), complex_pow(x, -a)) < 1e-10);
        }
    }
    for (const double x : {0.3, 2.0, 8.0}) {
        CHECK(rel_err(tricomi_u_integral(0.5, 0.5, x),
                      std::sqrt(kPi) * std::exp(x) * boost::math::erfc(std::sqrt(x))) < 1e-10);
    }
}

TEST_CASE("Tricomi U incomplete-gamma closed form") {
    CHECK(abs_err(tricomi_u_gamma(1.0, 2.0, 3.0), 1.0 / 3.0) < 1e-15);
    CHECK(rel_err(tricomi_u_gamma(1.0, 1.0, 1.0), tricomi_u_integral(1.0, 1.0, 1.0)) < 1e-9);
    const double s = 0.0;
    CHECK(tricomi_u_gamma(1.0, 1.0 - s, 1.0) == tricomi_u_gamma(1.0, 1.0, 1.0));
    CHECK_THROWS_AS(tricomi_u_gamma(2.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(tricomi_u_gamma(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("route agreement on 100 random points") {
    test_support::Sampler rng(99);
    const ConfluentParams integral = integral_only();
    for (int i = 0; i < 100; ++i) {
        const Complex g(rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0));
        const Complex x(rng.uniform(0.5, 5.0), rng.uniform(-2.0, 2.0));
        const Complex ui = tricomi_u(1.0, g, x, integral);
        const Complex ug = tricomi_u_gamma(1.0, g, x);
        CHECK(std::abs(ui - ug) <= 1e-8 * std::max(1.0, std::abs(ui)));
    }
}

TEST_CASE("route agreement on the imaginary axis") {
    const ConfluentParams integral = integral_only();
    for (const double y : {-12.0, -2.0, -0.5, 0.5, 4.0}) {
        for (const Complex g : {Complex(0.5, 0.0), Complex(2.5, 0.0), Complex(0.5, -1.0)}) {
            const Complex x(0.0, y);
            CHECK(rel_err(tricomi_u(1.0, g, x, integral), tricomi_u_gamma(1.0, g, x)) < 1e-9);
        }
    }
}

TEST_CASE("Kummer transformation") {
    test_support::Sampler rng(3);
    for (int i = 0; i < 50; ++i) {
        const Complex a(rng.uniform(0.5, 2.5), rng.uniform(-1.0, 1.0));
        const Complex g(rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0));
        const Complex x(rng.uniform(0.5, 5.0), rng.uniform(-2.0, 2.0));
        const Complex lhs = kummer_m(a - g + 1.0, 2.0 - g, x);
        const Complex rhs = std::exp(x) * kummer_m(1.0 - a, 2.0 - g, -x);
        CHECK(rel_err(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("connection formula examples") {
    CHECK(rel_err(connection_rhs(1.0, 0.5, 2.0), tricomi_u_integral(1.0, 0.5, 2.0)) < 1e-9);
    CHECK(connection_residual(1.0, 0.5, 2.0) < 1e-9);
    CHECK(connection_residual(2.0, 0.25, 3.0) < 1e-8);
    CHECK_THROWS_AS(connection_rhs(1.0, 2.0, 1.0), PoleError);
    // s = -2 puts gamma = 3 on an integer: inside the guard band
    CHECK_THROWS_AS(connection_residual(1.0, 3.0, Complex(1.0, 1.0)), PoleError);
    CHECK_THROWS_AS(connection_rhs(1.0, Complex(2.0 + 5e-9, 0.0), 1.0), PoleError);
}

TEST_CASE("connection formula at alpha = 1 reduces to the two-term form") {
    for (const Complex s : {Complex(0.5, 0.0), Complex(-1.5, 0.5), Complex(0.25, -2.0)}) {
        for (const Complex x : {Complex(2.0, 0.0), Complex(0.0, -kTwoPi * 0.3), Complex(1.0, 1.0)}) {
            const Complex reduced =
                kummer_m(1.0, 1.0 - s, x) / s - gamma(1.0 - s) * complex_pow(x, s) * std::exp(x) / s;
            CHECK(rel_err(connection_rhs(1.0, 1.0 - s, x), reduced) < 1e-12);
        }
    }
}

TEST_CASE("connection residual on the seeded sample") {
    for (const auto& t : connection_sample_points(100, 42)) {
        CHECK(connection_residual(t[0], t[1], t[2]) <= 1e-8);
    }
}

TEST_CASE("ODE residual examples") {
    CHECK(ode_residual(SolutionKind::kummer, 1.0, 2.0, 1.0, default_ode_step(1.0)) <= 1e-6);
    CHECK(ode_residual(SolutionKind::tricomi, 1.0, 0.5, 2.0, default_ode_step(2.0)) <= 1e-6);
    CHECK(ode_residual(SolutionKind::kummer, 0.0, Complex(0.3, 0.1), Complex(2.0, 1.0), 1e-3) < 1e-12);
    CHECK(default_ode_step(Complex(0.0, 3.0)) == doctest::Approx(3e-4));
    CHECK(default_ode_step(0.5) == doctest::Approx(1e-4));
    CHECK_THROWS_AS(ode_residual(SolutionKind::kummer, 1.0, 2.0, 1e-4, 1e-4), DomainError);
    CHECK_THROWS_AS(ode_residual(SolutionKind::kummer, 1.0, 2.0, 1.0, 0.0), DomainError);
}

TEST_CASE("ODE residual on the seeded sample") {
    for (const auto& t : connection_sample_points(20, 42)) {
        const double h = default_ode_step(t[2]);
        CHECK(ode_residual(SolutionKind::kummer, t[0], t[1], t[2], h) <= 1e-6);
        CHECK(ode_residual(SolutionKind::tricomi, t[0], t[1], t[2], h) <= 1e-6);
    }
}

TEST_CASE("asymptotic ratio") {
    const auto r1 = asymptotic_ratio(1.0, 0.5, {10.0, 100.0, 1000.0});
    CHECK(r1[0] > r1[1]);
    CHECK(r1[1] > r1[2]);
    for (const double r : asymptotic_ratio(1.0, 2.0, {10.0, 100.0, 1000.0, 10000.0})) CHECK(r <= 1e-12);
    const auto r2 = asymptotic_ratio(2.0, 1.0, {10.0, 100.0});
    CHECK(r2[0] > r2[1]);
    const auto decade = asymptotic_ratio(Complex(0.5, 0.5), 1.5, {10.0, 100.0, 1000.0, 10000.0});
    for (std::size_t i = 1; i < decade.size(); ++i) CHECK(decade[i] < decade[i - 1]);
    CHECK_THROWS_AS(asymptotic_ratio(1.0, 0.5, {10.0, 5.0}), DomainError);
    CHECK_THROWS_AS(asymptotic_ratio(1.0, 0.5, {1.0}), DomainError);
    CHECK_THROWS_AS(asymptotic_ratio(-1.0, 0.5, {10.0}), DomainError);
}
