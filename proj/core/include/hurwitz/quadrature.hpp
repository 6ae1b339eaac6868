#pragma once

#include <functional>

#include "hurwitz/numerics.hpp"

namespace hurwitz {

struct QuadratureSpec {
    enum class Method { double_exponential, adaptive_subdivision };

    Method method = Method::double_exponential;
    /// Double-exponential: number of step halvings. Adaptive: maximum
    /// bisection depth. Capped at kMaxLevel.
    int max_level = 12;
    double target_abs_tol = 1e-12;
    double target_rel_tol = 1e-12;

    static constexpr int kMaxLevel = 15;

    /// DomainError unless 1 <= max_level <= kMaxLevel and both tolerances > 0.
    void validate() const;

    bool operator==(const QuadratureSpec&) const = default;
};

struct QuadratureResult {
    Complex value;
    double error_bound = 0.0;
    int evaluations = 0;
};

/// Integrand on (0, 1) receiving both t and 1 - t, each computed without
/// cancellation. Use this form whenever the integrand is singular at t = 1.
using UnitIntegrand = std::function<Complex(double t, double one_minus_t)>;
using LineIntegrand = std::function<Complex(double)>;

/// Integral over (0, 1). Endpoint singularities of exponent > -1 are
/// handled by the tanh-sinh map. Throws ToleranceNotMet (carrying the best
/// estimate) if max(abs_tol, rel_tol * |I|) is not reached.
QuadratureResult integrate_unit_interval(const UnitIntegrand& f, const QuadratureSpec& spec);
QuadratureResult integrate_unit_interval(const LineIntegrand& f, const QuadratureSpec& spec);

/// Integral over (0, inf). The double-exponential method uses the exp-sinh
/// map; adaptive subdivision maps u = t / (1 - t). DivergenceSuspected when
/// the far tail does not shrink.
QuadratureResult integrate_semi_infinite(const LineIntegrand& f, const QuadratureSpec& spec);

}  // namespace hurwitz
