#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <hurwitz/errors.hpp>
#include <hurwitz/verify.hpp>

using namespace hurwitz;

namespace {

GridSpec grid(std::vector<Complex> s, std::vector<double> z) {
    GridSpec g;
    g.s_points = std::move(s);
    g.z_points = std::move(z);
    return g;
}

void clear_timestamps(std::vector<ResidualReport>& reports) {
    for (auto& r : reports) r.timestamp.clear();
}

}  // namespace

TEST_CASE("Hurwitz relation examples") {
    const auto r = check_hurwitz_relation(
        grid({-0.5, -1.5, Complex(-2.5, 2.0), Complex(-2.5, -2.0)}, {0.25, 0.5, 0.75}), 1e-8);
    CHECK(r.pass);
    CHECK(r.points.size() == 12);
    CHECK(r.max_rel <= 1e-8);

    const auto single = check_hurwitz_relation(grid({-1.0}, {1.0}));
    REQUIRE(single.points.size() == 1);
    CHECK(single.points[0].abs_residual <= 1e-10);
    CHECK(std::abs(single.points[0].lhs - Complex(-1.0 / 12.0)) < 1e-12);

    CHECK_THROWS_AS(check_hurwitz_relation(grid({-0.5, 2.0}, {0.5})), DomainError);
    CHECK_THROWS_AS(check_hurwitz_relation(grid({-0.5}, {0.0})), DomainError);
    CHECK_THROWS_AS(check_hurwitz_relation(grid({}, {0.5})), DomainError);
}

TEST_CASE("Hurwitz relation on the default grid") {
    const auto r = check_hurwitz_relation(default_hurwitz_grid());
    CHECK(r.pass);
    CHECK(r.check_id == "hurwitz");
    CHECK(r.tolerance == 1e-8);
    for (const auto& pt : r.points) {
        CHECK(!pt.error);
        CHECK(pt.s.real() < 0.0);
    }
}

TEST_CASE("report maxima and gate") {
    const auto r = check_hurwitz_relation(grid({-0.5, -1.5}, {0.25, 0.75}));
    double max_abs = 0.0;
    double max_rel = 0.0;
    for (const auto& pt : r.points) {
        max_abs = std::max(max_abs, pt.abs_residual);
        max_rel = std::max(max_rel, pt.rel_residual);
        CHECK(pt.abs_residual == std::abs(pt.lhs - pt.rhs));
    }
    CHECK(r.max_abs == max_abs);
    CHECK(r.max_rel == max_rel);

    ResidualReport tight = r;
    tight.tolerance = max_rel / 2.0;
    finalize(tight);
    CHECK_FALSE(tight.pass);

    ResidualReport errored = r;
    errored.points[0].error = "boom";
    finalize(errored);
    CHECK_FALSE(errored.pass);

    ResidualReport empty;
    empty.tolerance = 1.0;
    finalize(empty);
    CHECK_FALSE(empty.pass);
    CHECK(r.timestamp.size() == 20);
    CHECK(r.timestamp.back() == 'Z');
}

TEST_CASE("Riemann functional equation examples") {
    const auto r = check_riemann_fe({-1.0, -2.0, -0.5});
    REQUIRE(r.points.size() == 3);
    CHECK(r.points[0].abs_residual <= 1e-10);
    CHECK(std::abs(r.points[1].lhs) <= 1e-12);
    CHECK(std::abs(r.points[1].rhs) <= 1e-12);
    CHECK(r.points[1].abs_residual <= 1e-12);
    CHECK(r.points[2].abs_residual <= 1e-9);
    CHECK(r.pass);
    CHECK(check_riemann_fe(default_riemann_points()).pass);
    CHECK_THROWS_AS(check_riemann_fe({0.5}), DomainError);
}

TEST_CASE("U-sum agreement examples") {
    GridSpec g = grid({2.0}, {0.5});
    g.params.l_cap = 10'000;
    CHECK(check_via_u_agreement(g).points[0].abs_residual <= 1e-7);
    CHECK(check_via_u_agreement(grid({Complex(0.5, 1.0)}, {0.25})).points[0].abs_residual <= 1e-6);
    const auto zero = check_via_u_agreement(grid({0.0}, {0.75}));
    CHECK(std::abs(zero.points[0].lhs - Complex(-0.25)) <= 1e-8);
    CHECK(zero.points[0].abs_residual <= 1e-8);
    CHECK(check_via_u_agreement(default_via_u_grid()).pass);
    CHECK_THROWS_AS(check_via_u_agreement(grid({-1.5}, {0.5})), DomainError);
    CHECK_THROWS_AS(check_via_u_agreement(grid({0.5}, {1.0})), DomainError);
}

TEST_CASE("U-sum agreement improves with the cut") {
    const GridSpec base = grid({0.5, Complex(0.3, 2.0), 2.0}, {0.1, 0.5, 0.9});
    double previous_abs = INFINITY;
    double previous_bound = INFINITY;
    for (const long l : {250L, 500L, 1000L, 2000L}) {
        GridSpec g = base;
        g.params.l_cap = l;
        const auto r = check_via_u_agreement(g);
        double bound = 0.0;
        for (const auto& pt : r.points) bound = std::max(bound, pt.error_bound);
        CHECK(r.max_abs <= previous_abs + previous_bound);
        previous_abs = r.max_abs;
        previous_bound = bound;
    }
}

TEST_CASE("connection examples") {
    const auto r = check_connection({});
    CHECK(r.pass);
    CHECK(r.points.size() == 100);

    ConnectionSample forced;
    forced.sample_size = 1;
    forced.forced_gamma = Complex(2.0);
    const auto f = check_connection(forced);
    REQUIRE(f.points.size() == 1);
    REQUIRE(f.points[0].error);
    CHECK(f.points[0].error->find("PoleError") != std::string::npos);
    CHECK_FALSE(f.pass);

    ConnectionSample paper;
    paper.sample_size = 1;
    const double s = 0.5;
    const double l = 3.0;
    const double z = 0.25;
    paper.extra_points.push_back({Complex(1.0), Complex(1.0 - s), Complex(0.0, -2.0 * M_PI * l * z)});
    const auto p = check_connection(paper);
    REQUIRE(p.points.size() == 2);
    CHECK(!p.points[1].error);
    CHECK(p.points[1].abs_residual <= 1e-8);

    ConnectionSample none;
    none.sample_size = 0;
    CHECK_THROWS_AS(check_connection(none), DomainError);
}

TEST_CASE("connection sample is seeded and in range") {
    const auto a = connection_sample_points(50, 7);
    const auto b = connection_sample_points(50, 7);
    CHECK(a == b);
    CHECK(connection_sample_points(50, 8) != a);
    for (const auto& [alpha, gamma, x] : a) {
        CHECK(alpha.real() >= 0.5);
        CHECK(alpha.real() <= 2.5);
        CHECK(std::abs(alpha.imag()) <= 1.0);
        CHECK(std::abs(gamma.real()) <= 3.0);
        CHECK(std::abs(gamma.imag()) <= 2.0);
        CHECK(x.real() >= 0.5);
        CHECK(x.real() <= 5.0);
        CHECK(std::abs(x.imag()) <= 2.0);
    }
    for (const auto& [alpha, gamma, x] : hurwitz_connection_points()) {
        CHECK(alpha == Complex(1.0));
        CHECK(x.real() == 0.0);
    }
}

TEST_CASE("vanishing identity examples") {
    const auto r = check_vanishing_identity(grid({-2.0, -1.5}, {0.5, 0.25}));
    REQUIRE(r.points.size() == 4);
    CHECK(r.pass);
    for (const auto& pt : r.points) {
        CHECK(pt.abs_residual <= 1e-8);
        CHECK(pt.diagnostic.has_value());
    }
    CHECK_FALSE(r.notes.empty());
    CHECK_THROWS_AS(check_vanishing_identity(grid({-2.0}, {1.0})), DomainError);
    CHECK_THROWS_AS(check_vanishing_identity(grid({0.5}, {0.5})), DomainError);
}

TEST_CASE("vanishing diagnostic matches its own integral form") {
    // s = -2, z = 1/2 with S(theta) = pi (1/2 - theta) on (0, 1):
    // -1/24 + 1/8 - (2/pi)(1/4) int_0^1 (pi/2)(1-t)^3 dt = -1/24 + 1/8 - 1/16 = 1/48
    const auto r = check_vanishing_identity(grid({-2.0}, {0.5}));
    REQUIRE(r.points[0].diagnostic);
    CHECK(std::abs(*r.points[0].diagnostic - Complex(1.0 / 48.0)) <= 1e-10);
}

TEST_CASE("asymptotics examples") {
    const auto r = check_asymptotics({{1.0, 0.5}}, {10.0, 100.0, 1000.0});
    CHECK(r.pass);
    const auto exact = check_asymptotics({{1.0, 2.0}}, {10.0, 100.0, 1000.0});
    CHECK(exact.pass);
    for (const auto& pt : exact.points) CHECK(pt.abs_residual <= 1e-12);
    CHECK_THROWS_AS(check_asymptotics({{1.0, 0.5}}, {}), UsageError);
    CHECK_THROWS_AS(check_asymptotics({{1.0, 0.5}}, {100.0, 10.0}), UsageError);
    CHECK(check_asymptotics(default_asymptotic_cases(), default_asymptotic_ladder()).pass);
}

TEST_CASE("Fourier check reports the C/N constant") {
    const auto r = check_fourier(default_fourier_points(), default_fourier_ladder());
    CHECK(r.pass);
    CHECK(r.tolerance == 1.0);
    CHECK(r.max_rel < 0.2);
    CHECK(r.points.size() == default_fourier_points().size() * default_fourier_ladder().size());
}

TEST_CASE("run_suite examples") {
    const auto two = run_suite({"hurwitz", "connection"});
    REQUIRE(two.size() == 2);
    CHECK(two[0].check_id == "hurwitz");
    CHECK(two[1].check_id == "connection");
    CHECK(two[0].pass);
    CHECK(two[1].pass);
    CHECK(run_suite({}).empty());
    CHECK_THROWS_AS(run_suite({"bogus"}), UnknownCheckId);
    CHECK_THROWS_AS(run_suite({"hurwitz", "bogus"}), UnknownCheckId);
}

TEST_CASE("run_suite all passes under defaults") {
    const auto all = run_suite({"all"});
    REQUIRE(all.size() == kCheckIds.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].check_id == kCheckIds[i]);
        CHECK(all[i].pass);
    }
}

TEST_CASE("run_suite honors overrides") {
    SuiteOptions options;
    options.tol = 1e-30;
    CHECK_FALSE(run_suite({"hurwitz"}, options)[0].pass);
    options = {};
    options.s_points = std::vector<Complex>{-0.5};
    options.z_points = std::vector<double>{0.5};
    const auto r = run_suite({"hurwitz"}, options);
    CHECK(r[0].points.size() == 1);
    options = {};
    options.seed = 43;
    CHECK(run_suite({"connection"}, options)[0].points != run_suite({"connection"})[0].points);
}

TEST_CASE("reports are deterministic") {
    auto first = run_suite({"all"});
    auto second = run_suite({"all"});
    clear_timestamps(first);
    clear_timestamps(second);
    CHECK(first == second);
}

TEST_CASE("parallel evaluation does not depend on the worker count") {
    const GridSpec g = default_hurwitz_grid();
    setenv("HURWITZ_LAB_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    auto serial = check_hurwitz_relation(g);
    setenv("HURWITZ_LAB_THREADS", "7", 1);
    CHECK(worker_count() == 7);
    auto parallel = check_hurwitz_relation(g);
    unsetenv("HURWITZ_LAB_THREADS");
    serial.timestamp.clear();
    parallel.timestamp.clear();
    CHECK(serial == parallel);
}

TEST_CASE("parallel_for visits every index once and rethrows") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; }, 4);
    bool all_once = true;
    for (const auto& h : hits) all_once = all_once && h.load() == 1;
    CHECK(all_once);
    CHECK_THROWS_AS(parallel_for(
                        10, [](std::size_t i) {
                            if (i == 3) throw std::runtime_error("x");
                        },
                        3),
                    std::runtime_error);
}
