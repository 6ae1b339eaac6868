#include "hurwitz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

constexpr double kHalfPi = kPi / 2.0;
constexpr int kMinLevel = 3;

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

double target(const QuadratureSpec& spec, Complex value) {
    return std::max(spec.target_abs_tol, spec.target_rel_tol * std::abs(value));
}

// Level-by-level trapezoidal refinement on a doubly exponential map. `node(t)`
// returns the weighted integrand at t (0 when the node underflows).
template <class Node>
QuadratureResult refine_de(const Node& node, double t_lo, double t_hi,
                           const QuadratureSpec& spec, const char* name) {
    QuadratureResult out;
    Complex sum = 0.0;
    for (int k = static_cast<int>(std::ceil(t_lo)); k <= static_cast<int>(std::floor(t_hi)); ++k) {
        sum += node(static_cast<double>(k));
        ++out.evaluations;
    }
    Complex prev = sum;
    double h = 1.0;
    double err = std::abs(prev);
    for (int level = 1; level <= spec.max_level; ++level) {
        h *= 0.5;
        const long k_lo = static_cast<long>(std::ceil(t_lo / h));
        const long k_hi = static_cast<long>(std::floor(t_hi / h));
        for (long k = k_lo | 1L; k <= k_hi; k += 2) {
            if (k < k_lo) continue;
            sum += node(static_cast<double>(k) * h);
            ++out.evaluations;
        }
        const Complex current = h * sum;
        err = std::abs(current - prev);
        prev = current;
        if (level >= kMinLevel && err <= target(spec, current)) {
            out.value = current;
            out.error_bound = err;
            return out;
        }
    }
    throw ToleranceNotMet(std::string(name) + ": tolerance not met at max_level " +
                              std::to_string(spec.max_level),
                          prev, err);
}

// Gauss-Kronrod 7/15 on [mid - half, mid + half]; `cmid` is 1 - mid.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, ca, cb;  // endpoints and their complements 1 - a, 1 - b
    int depth;
    Complex value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
void gauss_kronrod(const F& f, Panel& p, int& evaluations) {
    const double mid = 0.5 * (p.a + p.b);
    const double cmid = 0.5 * (p.ca + p.cb);
    const double half = 0.5 * (p.b - p.a);
    const Complex center = f(mid, cmid);
    Complex kronrod = kWgk[7] * center;
    Complex gauss = kWg[3] * center;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const Complex pair = f(mid - dx, cmid + dx) + f(mid + dx, cmid - dx);
        kronrod += kWgk[i] * pair;
        if (i % 2 == 1) gauss += kWg[i / 2] * pair;
    }
    evaluations += 15;
    p.value = half * kronrod;
    p.error = std::abs(half * (kronrod - gauss));
}

template <class F>
QuadratureResult adaptive_unit(const F& f, const QuadratureSpec& spec) {
    const int max_depth = 8 * spec.max_level;
    constexpr std::size_t max_panels = 200000;
    QuadratureResult out;
    std::priority_queue<Panel> heap;
    Panel root{0.0, 1.0, 1.0, 0.0, 0, {}, 0.0};
    gauss_kronrod(f, root, out.evaluations);
    heap.push(root);
    Complex total = root.value;
    double total_err = root.error;
    while (!heap.empty() && total_err > target(spec, total)) {
        Panel worst = heap.top();
        if (worst.depth >= max_depth || heap.size() >= max_panels) {
            throw ToleranceNotMet("integrate (adaptive): subdivision limit reached", total,
                                  total_err);
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const double cmid = 0.5 * (worst.ca + worst.cb);
        Panel left{worst.a, mid, worst.ca, cmid, worst.depth + 1, {}, 0.0};
        Panel right{mid, worst.b, cmid, worst.cb, worst.depth + 1, {}, 0.0};
        gauss_kronrod(f, left, out.evaluations);
        gauss_kronrod(f, right, out.evaluations);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum the final partition to shed drift from the running updates.
    Complex resum = 0.0;
    double err_sum = 0.0;
    while (!heap.empty()) {
        resum += heap.top().value;
        err_sum += heap.top().error;
        heap.pop();
    }
    out.value = resum;
    out.error_bound = err_sum;
    return out;
}

void check_node(Complex v, double t, const char* name) {
    if (!finite(v)) {
        throw DomainError(std::string(name) + ": integrand not finite at node t = " +
                          std::to_string(t));
    }
}

}  // namespace

void QuadratureSpec::validate() const {
    if (max_level < 1 || max_level > kMaxLevel) {
        throw DomainError("QuadratureSpec: max_level must lie in [1, 15]");
    }
    if (!(target_abs_tol > 0.0) || !(target_rel_tol > 0.0)) {
        throw DomainError("QuadratureSpec: tolerances must be strictly positive");
    }
}

QuadratureResult integrate_unit_interval(const UnitIntegrand& f, const QuadratureSpec& spec) {
    spec.validate();
    if (spec.method == QuadratureSpec::Method::adaptive_subdivision) {
        return adaptive_unit(f, spec);
    }
    // tanh-sinh: t = (1 + tanh(pi/2 sinh s)) / 2, complements computed directly.
    const auto node = [&](double s) -> Complex {
        const double u = kHalfPi * std::sinh(s);
        const double e = std::exp(-2.0 * std::fabs(u));
        const double near_end = e / (1.0 + e);
        if (near_end == 0.0) return 0.0;
        const double far_end = 1.0 / (1.0 + e);
        const double w = kPi * std::cosh(s) * e / ((1.0 + e) * (1.0 + e));
        const Complex v = s >= 0.0 ? f(far_end, near_end) : f(near_end, far_end);
        check_node(v, s, "integrate_unit_interval");
        return w * v;
    };
    return refine_de(node, -6.0, 6.0, spec, "integrate_unit_interval");
}

QuadratureResult integrate_unit_interval(const LineIntegrand& f, const QuadratureSpec& spec) {
    return integrate_unit_interval(
        UnitIntegrand([&f](double t, double) { return f(t); }), spec);
}

QuadratureResult integrate_semi_infinite(const LineIntegrand& f, const QuadratureSpec& spec) {
    spec.validate();
    if (spec.method == QuadratureSpec::Method::adaptive_subdivision) {
        // u = t / (1 - t), du = dt / (1 - t)^2
        const UnitIntegrand mapped = [&f](double t, double ct) -> Complex {
            if (ct == 0.0) return 0.0;
            return f(t / ct) / (ct * ct);
        };
        return adaptive_unit(mapped, spec);
    }
    constexpr double t_lo = -6.5;
    constexpr double t_hi = 5.5;
    constexpr double tail_band = 4.5;
    double tail_mass = 0.0;
    // exp-sinh: u = exp(pi/2 sinh s).
    const auto node = [&](double s) -> Complex {
        const double u = std::exp(kHalfPi * std::sinh(s));
        if (u == 0.0) return 0.0;
        const double w = kHalfPi * std::cosh(s) * u;
        const Complex v = f(u);
        if (!finite(v)) {
            if (s > 3.0) return 0.0;  // far tail: overflow of a vanishing product
            check_node(v, s, "integrate_semi_infinite");
        }
        const Complex wv = w * v;
        if (s >= tail_band) tail_mass = std::max(tail_mass, std::abs(wv));
        return wv;
    };
    const auto divergence = [&] {
        return DivergenceSuspected("integrate_semi_infinite: integrand tail does not decay (edge weight " +
                                   std::to_string(tail_mass) + ")");
    };
    QuadratureResult r;
    try {
        r = refine_de(node, t_lo, t_hi, spec, "integrate_semi_infinite");
    } catch (const ToleranceNotMet& e) {
        if (tail_mass > target(spec, e.estimate())) throw divergence();
        throw;
    }
    if (tail_mass > target(spec, r.value)) throw divergence();
    return r;
}

}  // namespace hurwitz
