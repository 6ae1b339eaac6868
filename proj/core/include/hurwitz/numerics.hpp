#pragma once

// Scalar engines shared by every other module: complex gamma, principal
// branch powers and logarithms, and the upper incomplete gamma function.

#include <cmath>
#include <complex>
#include <numbers>

namespace hurwitz {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Neumaier-compensated accumulator over complex terms. Summation order is
/// the caller's; results are deterministic for a fixed order.
class CompensatedSum {
public:
    void add(Complex term) noexcept {
        re_.add(term.real());
        im_.add(term.imag());
        magnitude_ += std::abs(term);
    }
    CompensatedSum& operator+=(Complex term) noexcept {
        add(term);
        return *this;
    }
    Complex value() const noexcept { return {re_.value(), im_.value()}; }
    /// Sum of |term|; scales the rounding error of value().
    double magnitude() const noexcept { return magnitude_; }

private:
    struct Lane {
        double sum = 0.0;
        double comp = 0.0;
        void add(double x) noexcept {
            const double t = sum + x;
            if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
            else comp += (x - t) + sum;
            sum = t;
        }
        double value() const noexcept { return sum + comp; }
    };
    Lane re_;
    Lane im_;
    double magnitude_ = 0.0;
};

/// Distance below which an argument counts as sitting on a gamma pole.
inline constexpr double kGammaPoleThreshold = 1e-12;

/// Throws OverflowError when `v` has a non-finite component. Returns `v`.
Complex require_finite(Complex v, const char* what);

/// Log with argument in (-pi, pi]; negative reals map to +i*pi regardless
/// of the sign of a zero imaginary part.
Complex principal_log(Complex w);

/// base^exponent = exp(exponent * principal_log(base)).
/// 0^p is 0 for re(p) > 0 and a DomainError otherwise.
Complex complex_pow(Complex base, Complex exponent);

/// Exact integer power by repeated squaring (no branch involved).
Complex integer_pow(Complex base, int n);

/// sin(pi*s) and cos(pi*s) with exact zeros at the integers (resp.
/// half-integers) along the real axis.
Complex sin_pi(Complex s);
Complex cos_pi(Complex s);

/// Pochhammer symbol (s)_n = s (s+1) ... (s+n-1).
Complex pochhammer(Complex s, int n);

/// Principal value of log Gamma(s) (imaginary part wrapped into (-pi, pi]).
/// Lanczos approximation, reflected for re(s) < 0.5.
Complex log_gamma(Complex s);

/// Gamma(s). PoleError within kGammaPoleThreshold of 0, -1, -2, ...;
/// OverflowError when |Gamma(s)| leaves the double range.
Complex gamma(Complex s);

/// Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt, principal branch of t^(a-1),
/// cut along the negative real x axis. Series at small |x|, modified Lentz
/// continued fraction elsewhere.
Complex upper_incomplete_gamma(Complex a, Complex x);

/// e^x x^(-a) Gamma(a, x). Stays finite where Gamma(a, x) itself under- or
/// overflows (large |x|), which the Tricomi closed form relies on.
Complex upper_incomplete_gamma_scaled(Complex a, Complex x);

}  // namespace hurwitz
