#include "hurwitz/bernoulli.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace mp = boost::multiprecision;
using Integer = mp::cpp_int;

namespace {

void check_index(int n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative index");
    if (n > kMaxBernoulliIndex) {
        throw CapExceeded(std::string(what) + ": index " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxBernoulliIndex));
    }
}

std::vector<std::vector<Integer>> binomial_rows(int max_n) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(max_n) + 1);
    rows[0] = {1};
    for (int n = 1; n <= max_n; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        const auto& prev = rows[static_cast<std::size_t>(n) - 1];
        row.assign(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k) - 1] + prev[static_cast<std::size_t>(k)];
        }
    }
    return rows;
}

}  // namespace

double to_double(const Rational& r) {
    Integer num = mp::numerator(r);
    const Integer den = mp::denominator(r);
    if (num == 0) return 0.0;
    const bool negative = num < 0;
    if (negative) num = -num;
    // Scale so the integer quotient has 63..64 bits; the remainder becomes a
    // sticky bit below the rounding position.
    const long shift = 63 - (static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)));
    Integer q;
    Integer rem;
    if (shift >= 0) {
        mp::divide_qr(Integer(num << static_cast<unsigned>(shift)), den, q, rem);
    } else {
        mp::divide_qr(num, Integer(den << static_cast<unsigned>(-shift)), q, rem);
    }
    auto bits = q.convert_to<std::uint64_t>();
    if (rem != 0) bits |= 1U;
    const double v = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
    return negative ? -v : v;
}

Rational to_rational(double x) {
    if (!std::isfinite(x)) throw DomainError("to_rational: non-finite value");
    if (x == 0.0) return Rational(0);
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent);
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    Rational r{Integer(scaled)};
    const int shift = exponent - 53;
    if (shift >= 0) {
        r *= Rational(Integer(1) << shift);
    } else {
        r /= Rational(Integer(1) << -shift);
    }
    return r;
}

std::vector<Rational> bernoulli_numbers(int max_n) {
    check_index(max_n, "bernoulli_numbers");
    const auto binom = binomial_rows(max_n + 1);
    std::vector<Rational> b(static_cast<std::size_t>(max_n) + 1);
    b[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        if (n >= 3 && n % 2 == 1) {
            b[static_cast<std::size_t>(n)] = 0;
            continue;
        }
        const auto& row = binom[static_cast<std::size_t>(n) + 1];
        Rational acc = 0;
        for (int k = 0; k < n; ++k) {
            acc += Rational(row[static_cast<std::size_t>(k)]) * b[static_cast<std::size_t>(k)];
        }
        b[static_cast<std::size_t>(n)] = -acc / Rational(n + 1);
    }
    return b;
}

BernoulliTable::BernoulliTable(int max_n) : numbers_(bernoulli_numbers(max_n)) {
    const auto binom = binomial_rows(max_n);
    polys_.resize(numbers_.size());
    polys_double_.resize(numbers_.size());
    for (int n = 0; n <= max_n; ++n) {
        auto& coeffs = polys_[static_cast<std::size_t>(n)];
        coeffs.resize(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            coeffs[static_cast<std::size_t>(j)] =
                Rational(binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]) *
                numbers_[static_cast<std::size_t>(n - j)];
        }
        auto& approx = polys_double_[static_cast<std::size_t>(n)];
        approx.reserve(coeffs.size());
        for (const auto& c : coeffs) approx.push_back(to_double(c));
    }
}

const BernoulliTable& BernoulliTable::shared() {
    static const BernoulliTable table(kMaxBernoulliIndex);
    return table;
}

const Rational& BernoulliTable::number(int n) const {
    if (n < 0 || n > max_n()) throw CapExceeded("BernoulliTable: index out of table range");
    return numbers_[static_cast<std::size_t>(n)];
}

double BernoulliTable::number_double(int n) const {
    return poly_value(n, 0.0);
}

const std::vector<Rational>& BernoulliTable::poly(int n) const {
    if (n < 0 || n > max_n()) throw CapExceeded("BernoulliTable: index out of table range");
    return polys_[static_cast<std::size_t>(n)];
}

double BernoulliTable::poly_value(int n, double t) const {
    if (n < 0 || n > max_n()) throw CapExceeded("BernoulliTable: index out of table range");
    const auto& c = polys_double_[static_cast<std::size_t>(n)];
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rational bernoulli_poly_exact(int n, const Rational& t) {
    check_index(n, "bernoulli_poly");
    const auto& c = BernoulliTable::shared().poly(n);
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Complex bernoulli_poly(int n, Complex t) {
    check_index(n, "bernoulli_poly");
    if (t.imag() == 0.0) return {to_double(bernoulli_poly_exact(n, to_rational(t.real()))), 0.0};
    const auto& c = BernoulliTable::shared().poly(n);
    const Rational tr = to_rational(t.real());
    const Rational ti = to_rational(t.imag());
    Rational re = 0;
    Rational im = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        Rational next_re = re * tr - im * ti + *it;
        im = re * ti + im * tr;
        re = std::move(next_re);
    }
    return require_finite({to_double(re), to_double(im)}, "bernoulli_poly");
}

double periodic_bernoulli(int n, double t) {
    if (!std::isfinite(t)) throw DomainError("periodic_bernoulli: t must be finite");
    return bernoulli_poly(n, Complex(t - std::floor(t), 0.0)).real();
}

double sawtooth_sum(double theta) {
    if (!(theta >= 0.0 && theta < 1.0)) {
        throw DomainError("sawtooth_sum: theta must lie in [0, 1)");
    }
    if (theta == 0.0) return 0.0;
    return kPi * (0.5 - theta);
}

double fourier_b2_partial(double t, long N) {
    if (N < 0) throw DomainError("fourier_b2_partial: N must be non-negative");
    if (!std::isfinite(t)) throw DomainError("fourier_b2_partial: t must be finite");
    const double frac = t - std::floor(t);
    // Smallest terms first, compensated.
    double sum = 0.0;
    double carry = 0.0;
    for (long n = N; n >= 1; --n) {
        const double dn = static_cast<double>(n);
        const double term = cos_pi(Complex(2.0 * dn * frac, 0.0)).real() / (dn * dn);
        const double y = term - carry;
        const double next = sum + y;
        carry = (next - sum) - y;
        sum = next;
    }
    return sum / (kPi * kPi);
}

}  // namespace hurwitz
