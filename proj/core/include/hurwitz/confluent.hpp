#pragma once

// Confluent hypergeometric functions: Kummer's F(alpha, gamma; x) and the
// Tricomi solution U(alpha, gamma; x), with the connection formula that ties
// U to the fundamental system at x = 0.

#include <vector>

#include "hurwitz/numerics.hpp"
#include "hurwitz/quadrature.hpp"

namespace hurwitz {

struct ConfluentParams {
    enum class URoute { laplace_integral, incomplete_gamma, automatic };

    /// Maximum number of Kummer series terms.
    long series_cap = 100000;
    /// Relative stopping threshold for series terms.
    double term_tol = 1e-16;
    QuadratureSpec quad{};
    URoute u_route = URoute::automatic;

    static constexpr long kMaxSeriesCap = 100000;

    void validate() const;

    bool operator==(const ConfluentParams&) const = default;
};

/// Distance from an integer at which connection_rhs refuses gamma_p.
inline constexpr double kIntegerGammaGuard = 1e-8;

/// Kummer series sum_n (alpha)_n x^n / ((gamma)_n n!). Stops after three
/// consecutive terms below term_tol * |partial sum|. PoleError when gamma_p
/// is a non-positive integer; ConvergenceError at series_cap.
Complex kummer_m(Complex alpha, Complex gamma_p, Complex x, const ConfluentParams& p = {});

/// U via x^-alpha / Gamma(alpha) * int_0^inf e^-w w^(alpha-1) (1 + w/x)^(gamma-alpha-1) dw,
/// i.e. the Laplace integral with its ray rotated onto arg(u) = -arg(x).
/// Requires re(alpha) > 0 and re(x) >= 0, x != 0.
Complex tricomi_u_integral(Complex alpha, Complex gamma_p, Complex x,
                           const ConfluentParams& p = {});

/// U(1, gamma; x) = e^x x^(1-gamma) Gamma(gamma-1, x). DomainError unless
/// alpha == 1 exactly.
Complex tricomi_u_gamma(Complex alpha, Complex gamma_p, Complex x);

/// U by the route selected in p.u_route; `automatic` takes the incomplete
/// gamma closed form for alpha == 1 and the integral otherwise.
Complex tricomi_u(Complex alpha, Complex gamma_p, Complex x, const ConfluentParams& p = {});

/// Gamma(1-gamma)/Gamma(alpha-gamma+1) F(alpha, gamma; x)
///   + Gamma(gamma-1)/Gamma(alpha) x^(1-gamma) e^x F(1-alpha, 2-gamma; -x).
/// PoleError when gamma_p is within kIntegerGammaGuard of an integer.
Complex connection_rhs(Complex alpha, Complex gamma_p, Complex x, const ConfluentParams& p = {});

/// |U - connection_rhs| / max(1, |U|) with U from tricomi_u.
double connection_residual(Complex alpha, Complex gamma_p, Complex x,
                           const ConfluentParams& p = {});

enum class SolutionKind { kummer, tricomi };

/// Default finite-difference step for ode_residual: 1e-4 * max(1, |x|).
double default_ode_step(Complex x);

/// |x y'' + (gamma - x) y' - alpha y| / max(1, |y|) with central differences
/// of step h. DomainError unless |x| >= 10 h.
double ode_residual(SolutionKind kind, Complex alpha, Complex gamma_p, Complex x, double h,
                    const ConfluentParams& p = {});

/// |x^alpha U(alpha, gamma; x) - 1| at x = each magnitude on the positive real
/// axis. Magnitudes must be increasing and >= 5.
std::vector<double> asymptotic_ratio(Complex alpha, Complex gamma_p,
                                     const std::vector<double>& magnitudes,
                                     const ConfluentParams& p = {});

}  // namespace hurwitz
