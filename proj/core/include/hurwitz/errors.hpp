#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

/// Base class for every failure raised by the library. `kind()` is a stable
/// identifier used in reports and CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string_view kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    std::string_view kind() const noexcept { return kind_; }

private:
    std::string_view kind_;
};

#define HURWITZ_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

/// Evaluation at (or within the guard band of) a pole.
HURWITZ_DEFINE_ERROR(PoleError);
/// Argument outside the operation's domain.
HURWITZ_DEFINE_ERROR(DomainError);
/// Result magnitude exceeds double precision range.
HURWITZ_DEFINE_ERROR(OverflowError);
/// Requested table size above the supported cap.
HURWITZ_DEFINE_ERROR(CapExceeded);
/// Euler-Maclaurin order too low for the requested s.
HURWITZ_DEFINE_ERROR(StripError);
/// Improper integral whose tail does not shrink under refinement.
HURWITZ_DEFINE_ERROR(DivergenceSuspected);
HURWITZ_DEFINE_ERROR(UnknownCheckId);
HURWITZ_DEFINE_ERROR(UsageError);

#undef HURWITZ_DEFINE_ERROR

/// An iteration (continued fraction, series) hit its cap. Carries the best
/// available partial value and the magnitude of the last increment.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::complex<double> partial,
                     double last_term)
        : Error("ConvergenceError", what), partial_(partial), last_term_(last_term) {}

    std::complex<double> partial() const noexcept { return partial_; }
    double last_term() const noexcept { return last_term_; }

private:
    std::complex<double> partial_;
    double last_term_;
};

/// Quadrature ran out of refinement levels before meeting its target.
class ToleranceNotMet : public Error {
public:
    ToleranceNotMet(const std::string& what, std::complex<double> estimate,
                    double achieved_bound)
        : Error("ToleranceNotMet", what), estimate_(estimate), bound_(achieved_bound) {}

    std::complex<double> estimate() const noexcept { return estimate_; }
    double achieved_bound() const noexcept { return bound_; }

private:
    std::complex<double> estimate_;
    double bound_;
};

}  // namespace hurwitz
