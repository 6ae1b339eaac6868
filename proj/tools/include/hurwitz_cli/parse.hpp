#pragma once

#include <string_view>
#include <vector>

#include <hurwitz/numerics.hpp>

namespace hurwitz::cli {

/// Parses `a`, `bi`, `a+bi`, `a-bi` (either part optional, `i` alone means
/// 1i). Decimal numbers with optional exponent. UsageError on anything else.
Complex parse_complex(std::string_view text);

/// Real-valued literal: a complex literal whose imaginary part is zero.
double parse_real(std::string_view text);

/// `start:stop:count`, count >= 1, evenly spaced and inclusive of both ends.
/// count = 1 yields {start}.
std::vector<double> parse_range(std::string_view text);

}  // namespace hurwitz::cli
