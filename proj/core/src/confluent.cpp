#include "hurwitz/confluent.hpp"

#include <cmath>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

double distance_to_integer(Complex z) {
    return std::abs(z - std::round(z.real()));
}

bool near_nonpositive_integer(Complex z, double tol) {
    return std::round(z.real()) <= 0.0 && distance_to_integer(z) < tol;
}

// 1 / Gamma(z), zero at the poles.
Complex reciprocal_gamma(Complex z) {
    if (near_nonpositive_integer(z, kGammaPoleThreshold)) return 0.0;
    return 1.0 / gamma(z);
}

bool is_one(Complex alpha) { return alpha == Complex(1.0, 0.0); }

}  // namespace

void ConfluentParams::validate() const {
    if (series_cap < 1 || series_cap > kMaxSeriesCap) {
        throw DomainError("ConfluentParams: series_cap must lie in [1, 100000]");
    }
    if (!(term_tol > 0.0)) throw DomainError("ConfluentParams: term_tol must be positive");
    quad.validate();
}

Complex kummer_m(Complex alpha, Complex gamma_p, Complex x, const ConfluentParams& p) {
    p.validate();
    if (near_nonpositive_integer(gamma_p, kGammaPoleThreshold)) {
        throw PoleError("kummer_m: gamma is a non-positive integer");
    }
    Complex term = 1.0;
    Complex sum = 1.0;
    int small_run = 0;
    for (long n = 0; n < p.series_cap; ++n) {
        const double dn = static_cast<double>(n);
        term *= (alpha + dn) * x / ((gamma_p + dn) * (dn + 1.0));
        sum += term;
        if (std::abs(term) <= p.term_tol * std::abs(sum)) {
            if (++small_run == 3) return require_finite(sum, "kummer_m");
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError("kummer_m: series_cap " + std::to_string(p.series_cap) +
                               " reached",
                           sum, std::abs(term));
}

Complex tricomi_u_integral(Complex alpha, Complex gamma_p, Complex x, const ConfluentParams& p) {
    p.validate();
    if (alpha.real() <= 0.0) throw DomainError("tricomi_u_integral: requires re(alpha) > 0");
    if (x == Complex(0.0, 0.0)) throw DomainError("tricomi_u_integral: x = 0");
    if (x.real() < 0.0) {
        throw DomainError("tricomi_u_integral: requires re(x) > 0 or purely imaginary x");
    }
    const Complex lead = alpha - 1.0;
    const Complex tail = gamma_p - alpha - 1.0;
    const Complex inv_x = 1.0 / x;
    const LineIntegrand integrand = [&](double w) -> Complex {
        const double decay = std::exp(-w);
        if (decay == 0.0) return 0.0;
        return decay * complex_pow(Complex(w, 0.0), lead) * complex_pow(1.0 + w * inv_x, tail);
    };
    const QuadratureResult r = integrate_semi_infinite(integrand, p.quad);
    return require_finite(complex_pow(x, -alpha) * r.value * reciprocal_gamma(alpha),
                          "tricomi_u_integral");
}

Complex tricomi_u_gamma(Complex alpha, Complex gamma_p, Complex x) {
    if (!is_one(alpha)) throw DomainError("tricomi_u_gamma: closed form requires alpha = 1");
    if (x == Complex(0.0, 0.0)) throw DomainError("tricomi_u_gamma: x = 0");
    // e^x x^(1-gamma) Gamma(gamma-1, x) is exactly the scaled incomplete gamma.
    return upper_incomplete_gamma_scaled(gamma_p - 1.0, x);
}

Complex tricomi_u(Complex alpha, Complex gamma_p, Complex x, const ConfluentParams& p) {
    switch (p.u_route) {
        case ConfluentParams::URoute::laplace_integral:
            return tricomi_u_integral(alpha, gamma_p, x, p);
        case ConfluentParams::URoute::incomplete_gamma:
            return tricomi_u_gamma(alpha, gamma_p, x);
        case ConfluentParams::URoute::automatic:
            break;
    }
    if (is_one(alpha)) return tricomi_u_gamma(alpha, gamma_p, x);
    return tricomi_u_integral(alpha, gamma_p, x, p);
}

Complex connection_rhs(Complex alpha, Complex gamma_p, Complex x, const ConfluentParams& p) {
    if (distance_to_integer(gamma_p) < kIntegerGammaGuard) {
        throw PoleError("connection_rhs: gamma within 1e-8 of an integer (logarithmic case)");
    }
    const Complex regular =
        gamma(1.0 - gamma_p) * reciprocal_gamma(alpha - gamma_p + 1.0) * kummer_m(alpha, gamma_p, x, p);
    const Complex c2 = gamma(gamma_p - 1.0) * reciprocal_gamma(alpha);
    Complex singular = 0.0;
    if (c2 != Complex(0.0, 0.0)) {
        singular = c2 * std::exp(x + (1.0 - gamma_p) * principal_log(x)) *
                   kummer_m(1.0 - alpha, 2.0 - gamma_p, -x, p);
    }
    return require_finite(regular + singular, "connection_rhs");
}

double connection_residual(Complex alpha, Complex gamma_p, Complex x, const ConfluentParams& p) {
    const Complex rhs = connection_rhs(alpha, gamma_p, x, p);
    const Complex u = tricomi_u(alpha, gamma_p, x, p);
    return std::abs(u - rhs) / std::max(1.0, std::abs(u));
}

double default_ode_step(Complex x) { return 1e-4 * std::max(1.0, std::abs(x)); }

double ode_residual(SolutionKind kind, Complex alpha, Complex gamma_p, Complex x, double h,
                    const ConfluentParams& p) {
    if (!(h > 0.0)) throw DomainError("ode_residual: step must be positive");
    if (std::abs(x) < 10.0 * h) throw DomainError("ode_residual: |x| must be at least 10 h");
    const auto y = [&](Complex at) {
        return kind == SolutionKind::kummer ? kummer_m(alpha, gamma_p, at, p)
                                            : tricomi_u(alpha, gamma_p, at, p);
    };
    const Complex y_minus = y(x - h);
    const Complex y0 = y(x);
    const Complex y_plus = y(x + h);
    const Complex d1 = (y_plus - y_minus) / (2.0 * h);
    const Complex d2 = (y_plus - 2.0 * y0 + y_minus) / (h * h);
    return std::abs(x * d2 + (gamma_p - x) * d1 - alpha * y0) / std::max(1.0, std::abs(y0));
}

std::vector<double> asymptotic_ratio(Complex alpha, Complex gamma_p,
                                     const std::vector<double>& magnitudes,
                                     const ConfluentParams& p) {
    if (alpha.real() <= 0.0) throw DomainError("asymptotic_ratio: requires re(alpha) > 0");
    std::vector<double> out;
    out.reserve(magnitudes.size());
    double previous = 0.0;
    for (double m : magnitudes) {
        if (!(m >= 5.0) || m <= previous) {
            throw DomainError("asymptotic_ratio: magnitudes must be increasing and >= 5");
        }
        previous = m;
        const Complex x(m, 0.0);
        out.push_back(std::abs(complex_pow(x, alpha) * tricomi_u(alpha, gamma_p, x, p) - 1.0));
    }
    return out;
}

}  // namespace hurwitz
