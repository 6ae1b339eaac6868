#include "hurwitz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "hurwitz/bernoulli.hpp"
#include "hurwitz/confluent.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

constexpr double kExactLaw = 1e-12;

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buf;
}

std::string describe(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        return std::string(err->kind()) + ": " + err->what();
    }
    return std::string("error: ") + e.what();
}

double relative_to(double abs, double scale) {
    if (abs == 0.0) return 0.0;
    return abs / std::max(scale, std::numeric_limits<double>::min());
}

void fill_residual(ResidualPoint& pt, double scale) {
    pt.abs_residual = std::abs(pt.lhs - pt.rhs);
    pt.rel_residual = relative_to(pt.abs_residual, scale);
}

// Evaluates every point in parallel; a throwing point records its error.
void evaluate_points(std::vector<ResidualPoint>& points,
                     const std::function<void(ResidualPoint&)>& eval) {
    parallel_for(
        points.size(),
        [&](std::size_t i) {
            try {
                eval(points[i]);
            } catch (const std::exception& e) {
                points[i].error = describe(e);
            }
        },
        worker_count());
}

std::vector<ResidualPoint> grid_points(const GridSpec& grid) {
    std::vector<ResidualPoint> points;
    points.reserve(grid.s_points.size() * grid.z_points.size());
    for (const Complex s : grid.s_points) {
        for (const double z : grid.z_points) {
            ResidualPoint pt;
            pt.s = s;
            pt.z = z;
            points.push_back(pt);
        }
    }
    return points;
}

// Uniform double in [0, 1) from the top 53 bits; the engine's output
// sequence is fixed by the standard, so samples repeat across platforms.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_uniform(rng);
}

std::string format_complex(Complex c) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
    return buf;
}

void require_grid(const GridSpec& grid, const char* id, bool (*admissible)(Complex, double)) {
    grid.params.validate();
    if (grid.s_points.empty() || grid.z_points.empty()) {
        throw DomainError(std::string(id) + ": empty grid");
    }
    for (const Complex s : grid.s_points) {
        for (const double z : grid.z_points) {
            if (!admissible(s, z)) {
                throw DomainError(std::string(id) + ": grid point s = " + format_complex(s) +
                                  ", z = " + std::to_string(z) + " outside the check's domain");
            }
        }
    }
}

}  // namespace

void finalize(ResidualReport& report) {
    report.max_abs = 0.0;
    report.max_rel = 0.0;
    bool errored = false;
    for (const auto& pt : report.points) {
        if (pt.error) {
            errored = true;
            continue;
        }
        report.max_abs = std::max(report.max_abs, pt.abs_residual);
        report.max_rel = std::max(report.max_rel, pt.rel_residual);
    }
    report.pass = !errored && !report.points.empty() && report.max_rel <= report.tolerance;
    report.timestamp = utc_timestamp();
}

unsigned worker_count() {
    if (const char* env = std::getenv("HURWITZ_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 1024L));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

GridSpec default_hurwitz_grid() {
    GridSpec g;
    g.s_points = {{-0.5, 0.0},  {-1.5, 0.0},  {-2.5, 0.0}, {-3.5, 0.0}, {-0.5, 2.0},
                  {-0.5, -2.0}, {-1.5, 2.0},  {-1.5, -2.0}, {-2.5, 2.0}, {-2.5, -2.0}};
    g.z_points = {0.1, 0.25, 0.5, 0.75, 0.9};
    return g;
}

std::vector<Complex> default_riemann_points() { return {-0.5, -1.0, -1.5, -2.0, -2.5}; }

GridSpec default_via_u_grid() {
    GridSpec g;
    g.s_points = {{2.0, 0.0}, {0.5, 0.0}, {0.0, 0.0}, {0.5, 1.0}};
    g.z_points = {0.25, 0.5, 0.75};
    return g;
}

ResidualReport check_hurwitz_relation(const GridSpec& grid, double tol) {
    ResidualReport report;
    require_grid(grid, "hurwitz", [](Complex s, double z) { return s.real() < 0.0 && z > 0.0 && z <= 1.0; });
    report.check_id = "hurwitz";
    report.tolerance = tol;
    report.params = grid.params;
    report.points = grid_points(grid);
    evaluate_points(report.points, [&](ResidualPoint& pt) {
        const Estimate lhs = hurwitz_em(pt.s, pt.z, grid.params);
        const Estimate rhs = hurwitz_rhs(pt.s, pt.z, grid.params);
        pt.lhs = lhs.value;
        pt.rhs = rhs.value;
        pt.error_bound = lhs.error_bound + rhs.error_bound;
        fill_residual(pt, std::max(1.0, std::abs(pt.lhs)));
    });
    finalize(report);
    return report;
}

ResidualReport check_riemann_fe(const std::vector<Complex>& s_points, double tol,
                                const EvalParams& params) {
    ResidualReport report;
    report.check_id = "riemann-fe";
    report.tolerance = tol;
    report.params = params;
    params.validate();
    if (s_points.empty()) throw DomainError("riemann-fe: no points");
    for (const Complex s : s_points) {
        if (s.real() >= 0.0) throw DomainError("riemann-fe: point s = " + format_complex(s) + " needs re(s) < 0");
        ResidualPoint pt;
        pt.s = s;
        pt.z = 1.0;
        report.points.push_back(pt);
    }
    evaluate_points(report.points, [&](ResidualPoint& pt) {
        const Complex s = pt.s;
        const Estimate lhs = riemann_zeta(s, params);
        EvalParams fine = params;
        fine.tol_abs = std::min(params.tol_abs, 1e-13);
        const Estimate reflected = hurwitz_direct(1.0 - s, 1.0, fine);
        const Complex factor = complex_pow(Complex(2.0, 0.0), s) *
                               complex_pow(Complex(kPi, 0.0), s - 1.0) * sin_pi(0.5 * s) *
                               gamma(1.0 - s);
        pt.lhs = lhs.value;
        pt.rhs = factor * reflected.value;
        pt.error_bound = lhs.error_bound + std::abs(factor) * reflected.error_bound;
        fill_residual(pt, std::max(1.0, std::abs(pt.lhs)));
    });
    finalize(report);
    return report;
}

ResidualReport check_via_u_agreement(const GridSpec& grid, double tol) {
    ResidualReport report;
    require_grid(grid, "via-u", [](Complex s, double z) {
        return s.real() > -1.0 && s != Complex(1.0, 0.0) && z > 0.0 && z < 1.0;
    });
    report.check_id = "via-u";
    report.tolerance = tol;
    report.params = grid.params;
    report.points = grid_points(grid);
    evaluate_points(report.points, [&](ResidualPoint& pt) {
        const Estimate lhs = hurwitz_via_u(pt.s, pt.z, grid.params);
        const Estimate rhs = hurwitz_em(pt.s, pt.z, grid.params);
        pt.lhs = lhs.value;
        pt.rhs = rhs.value;
        pt.error_bound = lhs.error_bound + rhs.error_bound;
        fill_residual(pt, std::max(std::abs(pt.lhs), std::abs(pt.rhs)));
    });
    finalize(report);
    return report;
}

std::vector<std::array<Complex, 3>> connection_sample_points(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::array<Complex, 3>> triples;
    for (int i = 0; i < count; ++i) {
        const double ar = uniform(rng, 0.5, 2.5);
        const double ai = uniform(rng, -1.0, 1.0);
        const double gr = uniform(rng, -3.0, 3.0);
        const double gi = uniform(rng, -2.0, 2.0);
        const double xr = uniform(rng, 0.5, 5.0);
        const double xi = uniform(rng, -2.0, 2.0);
        triples.push_back({Complex(ar, ai), Complex(gr, gi), Complex(xr, xi)});
    }
    return triples;
}

std::vector<std::array<Complex, 3>> hurwitz_connection_points() {
    struct Spec {
        Complex s;
        double l;
        double z;
    };
    const Spec specs[] = {
        {{0.5, 0.0}, 3.0, 0.25}, {{0.5, 0.0}, 1.0, 0.5},   {{-0.5, 1.0}, 2.0, 0.1},
        {{0.25, 0.0}, -1.0, 0.75}, {{-1.5, 0.0}, 1.0, 0.3},
    };
    std::vector<std::array<Complex, 3>> out;
    for (const auto& sp : specs) {
        out.push_back({Complex(1.0, 0.0), 1.0 - sp.s, Complex(0.0, -kTwoPi * sp.l * sp.z)});
    }
    return out;
}

ResidualReport check_connection(const ConnectionSample& sample, double tol) {
    if (sample.sample_size < 1) throw DomainError("check_connection: sample_size must be >= 1");
    ResidualReport report;
    report.check_id = "connection";
    report.tolerance = tol;
    report.params.confluent = sample.params;

    std::vector<std::array<Complex, 3>> triples =
        connection_sample_points(sample.sample_size, sample.seed);
    if (sample.forced_gamma) {
        for (auto& t : triples) t[1] = *sample.forced_gamma;
    }
    triples.insert(triples.end(), sample.extra_points.begin(), sample.extra_points.end());

    for (const auto& t : triples) {
        ResidualPoint pt;
        pt.s = t[0];
        pt.label = "alpha=" + format_complex(t[0]) + " gamma=" + format_complex(t[1]) +
                   " x=" + format_complex(t[2]);
        report.points.push_back(pt);
    }
    evaluate_points(report.points, [&](ResidualPoint& pt) {
        const auto& t = triples[static_cast<std::size_t>(&pt - report.points.data())];
        pt.lhs = tricomi_u(t[0], t[1], t[2], sample.params);
        pt.rhs = connection_rhs(t[0], t[1], t[2], sample.params);
        fill_residual(pt, std::max(1.0, std::abs(pt.lhs)));
    });
    finalize(report);
    return report;
}

ResidualReport check_vanishing_identity(const GridSpec& grid, double tol) {
    ResidualReport report;
    require_grid(grid, "vanishing", [](Complex s, double z) { return s.real() < 0.0 && z > 0.0 && z < 1.0; });
    report.check_id = "vanishing";
    report.tolerance = tol;
    report.params = grid.params;
    report.points = grid_points(grid);
    evaluate_points(report.points, [&](ResidualPoint& pt) {
        const Complex s = pt.s;
        const double z = pt.z;
        const Estimate lhs = hurwitz_em(s, z, grid.params);
        const Estimate rhs = hurwitz_rhs(s, z, grid.params);
        pt.lhs = lhs.value;
        pt.rhs = rhs.value;
        pt.error_bound = lhs.error_bound + rhs.error_bound;
        fill_residual(pt, std::max(1.0, std::abs(pt.lhs)));

        const Complex z_pow = complex_pow(Complex(z, 0.0), -s);
        const QuadratureResult q = integrate_unit_interval(
            UnitIntegrand([&](double t, double one_minus_t) -> Complex {
                if (one_minus_t == 0.0) return 0.0;
                return sawtooth_sum(z * t) * complex_pow(Complex(one_minus_t, 0.0), -s);
            }),
            grid.params.quad);
        const Complex scale = z_pow * s / kPi;
        pt.diagnostic = z * z_pow / (s - 1.0) + 0.5 * z_pow + scale * q.value;
        pt.diagnostic_bound = std::abs(scale) * q.error_bound;
    });
    report.notes.push_back(
        "diagnostic: direct sawtooth-integral form of the l-sum identity, ungated");
    finalize(report);
    return report;
}

std::vector<AsymptoticCase> default_asymptotic_cases() {
    return {{{1.0, 0.0}, {0.5, 0.0}},
            {{2.0, 0.0}, {1.0, 0.0}},
            {{0.5, 0.5}, {1.5, 0.0}},
            {{1.0, 0.0}, {2.0, 0.0}}};
}

std::vector<double> default_asymptotic_ladder() { return {10.0, 100.0, 1000.0, 10000.0}; }

ResidualReport check_asymptotics(const std::vector<AsymptoticCase>& cases,
                                 const std::vector<double>& magnitudes,
                                 const ConfluentParams& params) {
    if (magnitudes.empty()) throw UsageError("check_asymptotics: empty ladder");
    if (!std::is_sorted(magnitudes.begin(), magnitudes.end(), std::less_equal<>())) {
        throw UsageError("check_asymptotics: ladder must be strictly increasing");
    }
    ResidualReport report;
    report.check_id = "asymptotics";
    report.tolerance = 0.0;
    report.params.confluent = params;
    for (const auto& c : cases) {
        std::vector<double> ratios;
        std::optional<std::string> failure;
        try {
            ratios = asymptotic_ratio(c.alpha, c.gamma, magnitudes, params);
        } catch (const std::exception& e) {
            failure = describe(e);
        }
        for (std::size_t i = 0; i < magnitudes.size(); ++i) {
            ResidualPoint pt;
            pt.s = c.alpha;
            pt.z = magnitudes[i];
            pt.label = "alpha=" + format_complex(c.alpha) + " gamma=" + format_complex(c.gamma) +
                       " x=" + std::to_string(magnitudes[i]);
            if (failure) {
                pt.error = failure;
                report.points.push_back(pt);
                continue;
            }
            const double r = ratios[i];
            pt.lhs = 1.0 + r;
            pt.rhs = 1.0;
            pt.abs_residual = r;
            if (r > kExactLaw && i > 0 && r >= ratios[i - 1]) {
                pt.rel_residual = r - ratios[i - 1] + std::numeric_limits<double>::min();
            }
            report.points.push_back(pt);
        }
    }
    finalize(report);
    return report;
}

std::vector<double> default_fourier_points() {
    std::vector<double> t;
    for (int i = 0; i < 10; ++i) t.push_back(i / 10.0);
    return t;
}

std::vector<long> default_fourier_ladder() { return {16, 32, 64, 128, 256, 512, 1024, 2048, 4096}; }

ResidualReport check_fourier(const std::vector<double>& t_points, const std::vector<long>& ladder) {
    ResidualReport report;
    report.check_id = "fourier";
    report.tolerance = 1.0;
    for (const double t : t_points) {
        for (const long n : ladder) {
            ResidualPoint pt;
            pt.s = static_cast<double>(n);
            pt.z = t;
            report.points.push_back(pt);
        }
    }
    evaluate_points(report.points, [&](ResidualPoint& pt) {
        const auto n = static_cast<long>(pt.s.real());
        if (n < 1) throw DomainError("fourier: N must be positive");
        pt.lhs = fourier_b2_partial(pt.z, n);
        pt.rhs = periodic_bernoulli(2, pt.z);
        pt.abs_residual = std::abs(pt.lhs - pt.rhs);
        pt.rel_residual = static_cast<double>(n) * pt.abs_residual;
    });
    finalize(report);
    return report;
}

std::vector<ResidualReport> run_suite(const std::vector<std::string>& ids,
                                      const SuiteOptions& options) {
    std::vector<std::string> expanded;
    for (const auto& id : ids) {
        if (id == "all") {
            expanded.insert(expanded.end(), kCheckIds.begin(), kCheckIds.end());
        } else if (std::find(kCheckIds.begin(), kCheckIds.end(), id) != kCheckIds.end()) {
            expanded.push_back(id);
        } else {
            throw UnknownCheckId("unknown check id '" + id + "'");
        }
    }
    options.params.validate();

    const auto with_overrides = [&](GridSpec g) {
        if (options.s_points) g.s_points = *options.s_points;
        if (options.z_points) g.z_points = *options.z_points;
        g.params = options.params;
        return g;
    };
    const auto tol_or = [&](double fallback) { return options.tol.value_or(fallback); };

    std::vector<ResidualReport> out;
    for (const auto& id : expanded) {
        if (id == "hurwitz") {
            out.push_back(check_hurwitz_relation(with_overrides(default_hurwitz_grid()), tol_or(1e-8)));
        } else if (id == "riemann-fe") {
            out.push_back(check_riemann_fe(default_riemann_points(), tol_or(1e-9), options.params));
        } else if (id == "via-u") {
            out.push_back(check_via_u_agreement(with_overrides(default_via_u_grid()), tol_or(1e-6)));
        } else if (id == "connection") {
            ConnectionSample sample;
            sample.seed = options.seed;
            sample.extra_points = hurwitz_connection_points();
            sample.params = options.params.confluent;
            out.push_back(check_connection(sample, tol_or(1e-8)));
        } else if (id == "vanishing") {
            out.push_back(check_vanishing_identity(with_overrides(default_hurwitz_grid()), tol_or(1e-8)));
        } else if (id == "asymptotics") {
            out.push_back(check_asymptotics(default_asymptotic_cases(), default_asymptotic_ladder(),
                                            options.params.confluent));
        } else {
            out.push_back(check_fourier(default_fourier_points(), default_fourier_ladder()));
        }
    }
    return out;
}

}  // namespace hurwitz
