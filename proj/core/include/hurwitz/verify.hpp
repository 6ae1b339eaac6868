#pragma once

// Residual checks over parameter grids. Each check evaluates two independent
// sides of an identity per point and reports absolute and relative residuals
// together with the error bounds the evaluators attached.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/numerics.hpp"
#include "hurwitz/zeta.hpp"

namespace hurwitz {

struct GridSpec {
    std::vector<Complex> s_points;
    std::vector<double> z_points;
    EvalParams params{};
};

struct ResidualPoint {
    Complex s;
    double z = 0.0;
    Complex lhs;
    Complex rhs;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double error_bound = 0.0;
    /// Free-form point description (used where s, z do not name the point).
    std::string label;
    /// Set when evaluation threw; the point then fails the report.
    std::optional<std::string> error;
    /// Ungated side quantity reported alongside the residual.
    std::optional<Complex> diagnostic;
    double diagnostic_bound = 0.0;

    bool operator==(const ResidualPoint&) const = default;
};

struct ResidualReport {
    std::string check_id;
    std::vector<ResidualPoint> points;
    double max_abs = 0.0;
    double max_rel = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    EvalParams params{};
    /// UTC, ISO 8601. The only field allowed to differ between identical runs.
    std::string timestamp;
    std::vector<std::string> notes;

    bool operator==(const ResidualReport&) const = default;
};

/// Fills max_abs, max_rel, pass and timestamp from the points.
/// pass <=> no point errored and max_rel <= tolerance.
void finalize(ResidualReport& report);

/// Thread count for point-parallel checks: HURWITZ_LAB_THREADS when set to a
/// positive integer, otherwise the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers. The first
/// exception is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads);

GridSpec default_hurwitz_grid();
std::vector<Complex> default_riemann_points();
GridSpec default_via_u_grid();

/// hurwitz_em against hurwitz_rhs; rel = |lhs - rhs| / max(1, |lhs|). Requires re(s) < 0.
ResidualReport check_hurwitz_relation(const GridSpec& grid, double tol = 1e-8);

/// zeta(s) against 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), the latter
/// from the direct series; rel = |lhs - rhs| / max(1, |lhs|). Requires re(s) < 0.
ResidualReport check_riemann_fe(const std::vector<Complex>& s_points, double tol = 1e-9,
                                const EvalParams& params = {});

/// hurwitz_via_u against hurwitz_em; rel = |lhs - rhs| / |lhs|.
ResidualReport check_via_u_agreement(const GridSpec& grid, double tol = 1e-6);

struct ConnectionSample {
    int sample_size = 100;
    std::uint64_t seed = 42;
    /// Appended (alpha, gamma, x) triples.
    std::vector<std::array<Complex, 3>> extra_points;
    /// Replaces the sampled gamma at every random point.
    std::optional<Complex> forced_gamma;
    ConfluentParams params{};
};

/// Seeded (alpha, gamma, x) triples from the region described at
/// check_connection, in generation order.
std::vector<std::array<Complex, 3>> connection_sample_points(int count, std::uint64_t seed);

/// The (alpha, gamma, x) = (1, 1 - s, -2 pi i l z) specializations that
/// appear in the U representation of the Hurwitz zeta.
std::vector<std::array<Complex, 3>> hurwitz_connection_points();

/// tricomi_u against connection_rhs at seeded random points with
/// re(alpha) in [0.5, 2.5], im(alpha) in [-1, 1], re(gamma) in [-3, 3],
/// im(gamma) in [-2, 2], re(x) in [0.5, 5], im(x) in [-2, 2].
/// rel = |lhs - rhs| / max(1, |lhs|).
ResidualReport check_connection(const ConnectionSample& sample, double tol = 1e-8);

/// The l-sum identity: lhs = hurwitz_em, rhs = hurwitz_rhs, gated as in
/// check_hurwitz_relation. Each point also carries the ungated value of
/// z^(1-s)/(s-1) + z^-s/2 + z^-s (s/pi) int_0^1 S(zt) (1-t)^-s dt with
/// S(theta) = sum_n sin(2 pi n theta)/n, as `diagnostic`.
ResidualReport check_vanishing_identity(const GridSpec& grid, double tol = 1e-8);

struct AsymptoticCase {
    Complex alpha;
    Complex gamma;
};

std::vector<AsymptoticCase> default_asymptotic_cases();
std::vector<double> default_asymptotic_ladder();

/// |x^alpha U(alpha, gamma; x) - 1| along the ladder. A case passes when the
/// sequence strictly decreases or stays at or below 1e-12 throughout. Each
/// point's rel_residual is its monotonicity violation (0 when fine); the
/// report tolerance is 0.
ResidualReport check_asymptotics(const std::vector<AsymptoticCase>& cases,
                                 const std::vector<double>& magnitudes,
                                 const ConfluentParams& params = {});

std::vector<double> default_fourier_points();
std::vector<long> default_fourier_ladder();

/// Partial Fourier sums of the periodic B_2 against the closed form. Each
/// point's rel_residual is N * |error|, the constant C in |error| <= C / N;
/// the report tolerance is 1.
ResidualReport check_fourier(const std::vector<double>& t_points, const std::vector<long>& ladder);

inline constexpr std::array<const char*, 7> kCheckIds = {
    "hurwitz", "riemann-fe", "via-u", "connection", "vanishing", "asymptotics", "fourier"};

struct SuiteOptions {
    EvalParams params{};
    /// Overrides the residual tolerance of hurwitz, riemann-fe, via-u,
    /// connection and vanishing.
    std::optional<double> tol;
    std::uint64_t seed = 42;
    /// Overrides the s and z points of hurwitz, via-u and vanishing.
    std::optional<std::vector<Complex>> s_points;
    std::optional<std::vector<double>> z_points;
};

/// Runs the named checks in order; "all" expands to every id in kCheckIds.
/// UnknownCheckId for anything else.
std::vector<ResidualReport> run_suite(const std::vector<std::string>& ids,
                                      const SuiteOptions& options = {});

}  // namespace hurwitz
