#include "hurwitz/zeta.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hurwitz/bernoulli.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_z(double z, bool allow_one, const char* what) {
    const bool ok = allow_one ? (z > 0.0 && z <= 1.0) : (z > 0.0 && z < 1.0);
    if (!ok) {
        throw DomainError(std::string(what) + ": z must lie in " +
                          (allow_one ? "(0, 1]" : "(0, 1)"));
    }
}

void check_finite_s(Complex s, const char* what) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError(std::string(what) + ": s must be finite");
    }
}

// B_k / k! rounded once, k = 0..kMaxBernoulliIndex.
const std::vector<double>& bernoulli_over_factorial() {
    static const std::vector<double> table = [] {
        const auto& b = BernoulliTable::shared();
        std::vector<double> out(kMaxBernoulliIndex + 1);
        Rational factorial = 1;
        for (int k = 0; k <= kMaxBernoulliIndex; ++k) {
            if (k > 0) factorial *= k;
            out[static_cast<std::size_t>(k)] = to_double(b.number(k) / factorial);
        }
        return out;
    }();
    return table;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// sum_{l>=start} l^-power for integer power >= 2: a short direct block, then
// Euler-Maclaurin at the shifted base.
double power_tail(int power, long start) {
    constexpr long block = 16;
    const double pw = power;
    double sum = 0.0;
    for (long l = start + block - 1; l >= start; --l) sum += std::pow(static_cast<double>(l), -pw);
    const double base = static_cast<double>(start + block);
    const auto& c = bernoulli_over_factorial();
    double tail = std::pow(base, 1.0 - pw) / (pw - 1.0) + 0.5 * std::pow(base, -pw);
    double poch = pw;  // (power)_{2j-1}
    for (int j = 1; j <= 4; ++j) {
        tail += c[static_cast<std::size_t>(2 * j)] * poch * std::pow(base, -pw - 2.0 * j + 1.0);
        poch *= (pw + 2.0 * j - 1.0) * (pw + 2.0 * j);
    }
    return sum + tail;
}

// e^(2 pi i n frac) with the phase 2 n frac reduced exactly modulo 2.
Complex unit_phase(long n, double frac) {
    const double two_n = 2.0 * static_cast<double>(n);
    const double prod = two_n * frac;
    const double lost = std::fma(two_n, frac, -prod);
    const double phase = std::remainder(prod, 2.0) + lost;
    return {cos_pi(Complex(phase, 0.0)).real(), sin_pi(Complex(phase, 0.0)).real()};
}

}  // namespace

void EvalParams::validate() const {
    if (em_order < 2 || em_order > kMaxEmOrder || em_order % 2 != 0) {
        throw DomainError("EvalParams: em_order must be even and in [2, 64]");
    }
    if (em_shift < 0) throw DomainError("EvalParams: em_shift must be non-negative");
    if (series_cap < 1) throw DomainError("EvalParams: series_cap must be positive");
    if (l_cap < 1) throw DomainError("EvalParams: l_cap must be at least 1");
    if (!(tol_abs > 0.0)) throw DomainError("EvalParams: tol_abs must be positive");
    quad.validate();
    confluent.validate();
}

Estimate hurwitz_direct(Complex s, double z, const EvalParams& p) {
    p.validate();
    check_finite_s(s, "hurwitz_direct");
    check_z(z, true, "hurwitz_direct");
    const double sigma = s.real();
    if (sigma <= 1.0) throw DomainError("hurwitz_direct: requires re(s) > 1");

    const double abs_s = std::abs(s);
    const double reach = std::pow(abs_s / (24.0 * p.tol_abs), 1.0 / (sigma + 1.0));
    const double wanted = std::max({16.0, std::ceil(reach) + 1.0, std::ceil(2.0 * abs_s)});
    if (wanted > static_cast<double>(p.series_cap)) {
        throw ConvergenceError("hurwitz_direct: needs " + std::to_string(wanted) +
                                   " terms, above series_cap",
                               0.0, 0.0);
    }
    const auto n_terms = static_cast<long>(wanted);
    CompensatedSum sum;
    for (long k = n_terms - 1; k >= 0; --k) {
        sum += complex_pow(Complex(static_cast<double>(k) + z, 0.0), -s);
    }
    const double mid = static_cast<double>(n_terms) - 0.5 + z;
    sum += complex_pow(Complex(mid, 0.0), 1.0 - s) / (s - 1.0);
    const double neglected = abs_s / 24.0 * std::pow(mid, -sigma - 1.0);
    return {require_finite(sum.value(), "hurwitz_direct"),
            neglected + 4.0 * kEps * sum.magnitude(), "direct-series"};
}

Estimate hurwitz_em(Complex s, double z, const EvalParams& p) {
    p.validate();
    check_finite_s(s, "hurwitz_em");
    check_z(z, true, "hurwitz_em");
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_em: simple pole at s = 1");
    const int m = p.em_order;
    if (s.real() <= 1.0 - m) {
        throw StripError("hurwitz_em: re(s) <= 1 - em_order (" + std::to_string(m) +
                         "); raise em_order");
    }

    const auto& bf = bernoulli_over_factorial();
    const auto& table = BernoulliTable::shared();
    const double a = static_cast<double>(p.em_shift) + z;

    CompensatedSum sum;
    for (int k = p.em_shift - 1; k >= 0; --k) {
        sum += complex_pow(Complex(static_cast<double>(k) + z, 0.0), -s);
    }
    const Complex a_pow = complex_pow(Complex(a, 0.0), -s);  // a^-s
    sum += a * a_pow / (s - 1.0);
    sum += 0.5 * a_pow;
    // B_{2j}/(2j)! (s)_{2j-1} a^(-s-2j+1)
    Complex poch = s;
    double a_inv = 1.0 / a;
    for (int j = 1; j <= m / 2; ++j) {
        sum += bf[static_cast<std::size_t>(2 * j)] * poch * a_pow * a_inv;
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        a_inv /= a * a;
    }

    // Remainder -(s)_m / m! int_0^inf Bbar_m(t) (t + a)^(-s-m) dt, one unit cell at a time.
    const Complex coef = -pochhammer(s, m) / factorial(m);
    const Complex exponent = -s - static_cast<double>(m);
    CompensatedSum remainder;
    double quad_error = 0.0;
    constexpr int kTailTerms = 12;
    constexpr long kMaxCells = 100000;
    for (long cell = 0; cell < kMaxCells; ++cell) {
        const double base = a + static_cast<double>(cell);
        const QuadratureResult r = integrate_unit_interval(
            LineIntegrand([&](double t) {
                return table.poly_value(m, t) * complex_pow(Complex(t + base, 0.0), exponent);
            }),
            p.quad);
        remainder += r.value;
        quad_error += r.error_bound;
        if (std::abs(coef * r.value) >= p.tol_abs) continue;

        // Past base' = base + 1 the remainder equals the further corrections
        // sum_{j > m/2} B_{2j}/(2j)! (s)_{2j-1} base'^(-s-2j+1).
        const double next = base + 1.0;
        const Complex next_pow = complex_pow(Complex(next, 0.0), -s);
        Complex tail_poch = pochhammer(s, m + 1);
        double next_inv = std::pow(next, -(m + 1.0));
        Complex tail = 0.0;
        double last = std::numeric_limits<double>::infinity();
        for (int j = m / 2 + 1; j <= m / 2 + kTailTerms && 2 * j <= kMaxBernoulliIndex; ++j) {
            const Complex term = bf[static_cast<std::size_t>(2 * j)] * tail_poch * next_pow * next_inv;
            const double mag = std::abs(term);
            if (mag > last) break;  // asymptotic series turned around
            tail += term;
            last = mag;
            if (mag < 1e-3 * p.tol_abs) break;
            tail_poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
            next_inv /= next * next;
        }
        if (last >= 1e-2 * p.tol_abs) continue;
        const Complex value = sum.value() + coef * remainder.value() + tail;
        const double bound = std::abs(coef) * quad_error + last +
                             4.0 * kEps * (sum.magnitude() + std::abs(coef) * remainder.magnitude());
        return {require_finite(value, "hurwitz_em"), bound, "euler-maclaurin"};
    }
    throw ConvergenceError("hurwitz_em: remainder did not settle within the cell cap",
                           sum.value() + coef * remainder.value(), 0.0);
}

Estimate hurwitz_via_u(Complex s, double z, const EvalParams& p) {
    p.validate();
    check_finite_s(s, "hurwitz_via_u");
    check_z(z, false, "hurwitz_via_u");
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_via_u: simple pole at s = 1");
    if (s.real() <= -1.0) throw DomainError("hurwitz_via_u: requires re(s) > -1");

    const Complex z_pow = complex_pow(Complex(z, 0.0), -s);  // z^-s
    const Complex head = z * z_pow / (s - 1.0) + 0.5 * z_pow;
    if (s == Complex(0.0, 0.0)) return {head, 4.0 * kEps * std::abs(head), "u-sum"};

    const Complex prefactor = s * z_pow / Complex(0.0, kTwoPi);
    const Complex gamma_p = 1.0 - s;
    const Complex step(0.0, -kTwoPi * z);  // x_l = l * step
    const Complex one(1.0, 0.0);

    CompensatedSum sum;
    for (long l = p.l_cap; l >= 1; --l) {
        const Complex x(0.0, -kTwoPi * z * static_cast<double>(l));
        const Complex u_plus = tricomi_u(one, gamma_p, x, p.confluent);
        const Complex u_minus = tricomi_u(one, gamma_p, std::conj(x), p.confluent);
        sum += (u_plus - u_minus) / static_cast<double>(l);
    }

    // U(1, 1-s; x) ~ sum_k (1+s)_k (-1)^k x^(-k-1); pairing l with -l keeps
    // the even k: 2 (1+s)_k step^(-k-1) sum_{l > l_cap} l^(-k-2).
    Complex tail = 0.0;
    double omitted = 0.0;
    Complex poch = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 40; k += 2) {
        const Complex term = 2.0 * poch * integer_pow(step, -k - 1) * power_tail(k + 2, p.l_cap + 1);
        const double mag = std::abs(term);
        if (mag >= last || mag < kEps * std::max(1e-300, std::abs(sum.value() + tail))) {
            omitted = std::min(mag, last);
            break;
        }
        tail += term;
        last = mag;
        omitted = mag;  // replaced on the next pass if a smaller term follows
        poch *= (1.0 + s + static_cast<double>(k)) * (2.0 + s + static_cast<double>(k));
    }

    const Complex value = head + prefactor * (sum.value() + tail);
    const double bound = std::abs(prefactor) * (omitted + 4.0 * kEps * sum.magnitude()) +
                         4.0 * kEps * std::abs(head);
    return {require_finite(value, "hurwitz_via_u"), bound, "u-sum"};
}

Estimate polylog_L(Complex s, double z, const EvalParams& p) {
    p.validate();
    check_finite_s(s, "polylog_L");
    check_z(z, true, "polylog_L");
    if (s.real() <= 1.0) throw DomainError("polylog_L: requires re(s) > 1");

    const double frac = z - std::floor(z);
    if (frac == 0.0) {
        Estimate e = hurwitz_direct(s, 1.0, p);
        e.route = "direct-series";
        return e;
    }
    const double dist = std::min(frac, 1.0 - frac);
    const Complex omega = unit_phase(1, frac);

    // (1 - w e^t)^-1 = sum_k h_k t^k
    constexpr int kMaxTerms = 60;
    std::vector<Complex> h(kMaxTerms + 1);
    h[0] = 1.0 / (1.0 - omega);
    const Complex ratio = omega / (1.0 - omega);
    for (int k = 1; k <= kMaxTerms; ++k) {
        Complex acc = 0.0;
        double inv_fact = 1.0;
        for (int j = 1; j <= k; ++j) {
            inv_fact /= j;
            acc += h[static_cast<std::size_t>(k - j)] * inv_fact;
        }
        h[static_cast<std::size_t>(k)] = ratio * acc;
    }

    const double wanted = std::max(16.0, std::ceil(4.0 * (std::abs(s) + 30.0) / (kTwoPi * dist)));
    if (wanted > static_cast<double>(p.series_cap)) {
        throw ConvergenceError("polylog_L: z too close to an integer for series_cap", 0.0, 0.0);
    }
    const auto n_head = static_cast<long>(wanted);

    CompensatedSum sum;
    for (long n = n_head - 1; n >= 1; --n) {
        sum += unit_phase(n, frac) * complex_pow(Complex(static_cast<double>(n), 0.0), -s);
    }
    const double big_n = static_cast<double>(n_head);
    const Complex lead = unit_phase(n_head, frac) * complex_pow(Complex(big_n, 0.0), -s);
    Complex poch = 1.0;
    double n_inv = 1.0;
    double last = std::numeric_limits<double>::infinity();
    Complex tail = 0.0;
    for (int k = 0; k <= kMaxTerms; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const Complex term = sign * h[static_cast<std::size_t>(k)] * poch * lead * n_inv;
        const double mag = std::abs(term);
        if (mag > last) break;
        if (mag == 0.0 && k > 0) {  // h_k vanishes at even k >= 2 when w = -1
            poch *= s + static_cast<double>(k);
            n_inv /= big_n;
            continue;
        }
        tail += term;
        last = mag;
        if (mag < 1e-3 * p.tol_abs * kEps) break;
        poch *= s + static_cast<double>(k);
        n_inv /= big_n;
    }
    sum += tail;
    return {require_finite(sum.value(), "polylog_L"), last + 4.0 * kEps * sum.magnitude(),
            "oscillatory-tail"};
}

Estimate riemann_zeta(Complex s, const EvalParams& p) { return hurwitz_em(s, 1.0, p); }

Estimate hurwitz_rhs(Complex s, double z, const EvalParams& p) {
    p.validate();
    check_finite_s(s, "hurwitz_rhs");
    check_z(z, true, "hurwitz_rhs");
    if (s.real() >= 0.0) throw DomainError("hurwitz_rhs: requires re(s) < 0");

    const Complex t = 1.0 - s;
    const Estimate first = polylog_L(t, z, p);
    const Estimate second = polylog_L(t, z == 1.0 ? 1.0 : 1.0 - z, p);
    const Complex g = gamma(t);
    const Complex c_plus = complex_pow(Complex(0.0, kTwoPi), s - 1.0);
    const Complex c_minus = complex_pow(Complex(0.0, -kTwoPi), s - 1.0);
    const Complex value = g * (c_plus * first.value + c_minus * second.value);
    const double bound =
        std::abs(g) * (std::abs(c_plus) * first.error_bound + std::abs(c_minus) * second.error_bound) +
        8.0 * kEps * std::abs(value);
    return {require_finite(value, "hurwitz_rhs"), bound, "polylog"};
}

}  // namespace hurwitz
