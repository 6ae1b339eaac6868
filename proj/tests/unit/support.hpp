#pragma once

#include <algorithm>
#include <complex>
#include <random>

namespace test_support {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
    const double scale = std::abs(want);
    return std::abs(got - want) / (scale > 0.0 ? scale : 1.0);
}

inline double abs_err(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want);
}

/// Deterministic uniform sampler for property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }
    std::complex<double> disc(double radius) {
        for (;;) {
            const std::complex<double> c(uniform(-radius, radius), uniform(-radius, radius));
            if (std::abs(c) <= radius) return c;
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace test_support
