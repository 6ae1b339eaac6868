#pragma once

// Hurwitz zeta zeta(s, z) = sum_{k>=0} (k + z)^-s by three independent routes,
// the periodic zeta (generalized polylogarithm) L(s, z), and the right-hand
// side of the Hurwitz relation built from L.

#include <string_view>

#include "hurwitz/confluent.hpp"
#include "hurwitz/numerics.hpp"
#include "hurwitz/quadrature.hpp"

namespace hurwitz {

struct EvalParams {
    /// Euler-Maclaurin order m (even); the continuation is valid for re(s) > 1 - m.
    int em_order = 8;
    /// Terms summed directly before the Euler-Maclaurin expansion starts.
    int em_shift = 10;
    /// Maximum number of directly summed terms in any series.
    long series_cap = 10'000'000;
    /// Truncation index of the l-sum in the U representation.
    long l_cap = 2000;
    double tol_abs = 1e-9;
    QuadratureSpec quad{};
    ConfluentParams confluent{};

    static constexpr int kMaxEmOrder = 64;

    void validate() const;

    bool operator==(const EvalParams&) const = default;
};

struct Estimate {
    Complex value;
    /// Estimated absolute error (truncation plus accumulated rounding).
    double error_bound = 0.0;
    std::string_view route;
};

/// Direct series for re(s) > 1 with a midpoint-shifted tail integral
/// (N - 1/2 + z)^(1-s) / (s - 1). N grows until the first neglected
/// correction s (N - 1/2 + z)^(-s-1) / 24 is below tol_abs.
Estimate hurwitz_direct(Complex s, double z, const EvalParams& p = {});

/// Euler-Maclaurin continuation of order em_order from base a = em_shift + z.
/// The remainder integral against the periodic Bernoulli function is
/// integrated one unit cell at a time; past the last cell the tail is the
/// next Euler-Maclaurin corrections. PoleError at s = 1, StripError when
/// re(s) <= 1 - em_order.
Estimate hurwitz_em(Complex s, double z, const EvalParams& p = {});

/// z^(1-s)/(s-1) + z^-s/2 + s z^-s/(2 pi i) sum_{l != 0} U(1, 1-s; -2 pi i l z) / l,
/// with l and -l paired and the sum cut at l_cap. The cut tail is summed
/// from the large-|x| expansion of U; the first omitted term is the
/// reported error. Requires 0 < z < 1 and re(s) > -1.
Estimate hurwitz_via_u(Complex s, double z, const EvalParams& p = {});

/// L(s, z) = sum_{n>=1} e^(2 pi i n z) / n^s for re(s) > 1. Integer z reduces
/// to the Riemann zeta via the direct series; otherwise a direct head is
/// followed by the asymptotic tail sum_{n>=N} w^n f(n) = w^N (1 - w e^D)^-1 f(N).
Estimate polylog_L(Complex s, double z, const EvalParams& p = {});

/// zeta(s) = hurwitz_em(s, 1).
Estimate riemann_zeta(Complex s, const EvalParams& p = {});

/// Gamma(1-s) {(2 pi i)^(s-1) L(1-s, z) + (-2 pi i)^(s-1) L(1-s, 1-z)} on the
/// principal branch, for re(s) < 0. At z = 1 the second polylog is L(1-s, 1).
Estimate hurwitz_rhs(Complex s, double z, const EvalParams& p = {});

}  // namespace hurwitz
