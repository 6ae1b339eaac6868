#pragma once

// Exact Bernoulli numbers and polynomials (generating function
// u e^{tu} / (e^u - 1), so B_1 = -1/2), their periodic extensions and the
// closed-form sawtooth series.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "hurwitz/numerics.hpp"

namespace hurwitz {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBernoulliIndex = 128;

/// Correctly rounded conversion (round to nearest, ties to even).
double to_double(const Rational& r);
/// Exact conversion; every finite double is a dyadic rational.
Rational to_rational(double x);

class BernoulliTable {
public:
    /// Exact table for indices 0..max_n. CapExceeded above kMaxBernoulliIndex.
    explicit BernoulliTable(int max_n);

    /// Process-wide table up to kMaxBernoulliIndex, built once.
    static const BernoulliTable& shared();

    int max_n() const noexcept { return static_cast<int>(numbers_.size()) - 1; }

    const Rational& number(int n) const;
    double number_double(int n) const;

    /// Coefficients of B_n(t) in ascending powers of t.
    const std::vector<Rational>& poly(int n) const;

    /// B_n(t) in double precision by Horner on pre-rounded coefficients.
    /// Fast path for inner loops; bernoulli_poly() is the exact route.
    double poly_value(int n, double t) const;

    const std::vector<Rational>& numbers() const noexcept { return numbers_; }

private:
    std::vector<Rational> numbers_;
    std::vector<std::vector<Rational>> polys_;
    std::vector<std::vector<double>> polys_double_;
};

/// B_0..B_max_n from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1.
std::vector<Rational> bernoulli_numbers(int max_n);

/// B_n(t) for complex t: Horner in exact rational arithmetic, rounded once.
Complex bernoulli_poly(int n, Complex t);

/// Exact B_n(t) at a rational point.
Rational bernoulli_poly_exact(int n, const Rational& t);

/// B_n(t - floor(t)).
double periodic_bernoulli(int n, double t);

/// Closed form of sum_{n>=1} sin(2 pi n theta) / n on [0, 1):
/// pi (1/2 - theta) inside, 0 at theta = 0.
double sawtooth_sum(double theta);

/// (1/pi^2) sum_{n=1}^{N} cos(2 pi n t) / n^2, the truncated Fourier series
/// of the periodic B_2. N = 0 is the empty sum.
double fourier_b2_partial(double t, long N);

}  // namespace hurwitz
