#include "hurwitz_cli/parse.hpp"

#include <cmath>
#include <regex>
#include <string>

#include <hurwitz/errors.hpp>

namespace hurwitz::cli {

namespace {

const std::string kNumber = R"((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)";

double to_double(const std::string& text, std::string_view whole) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("malformed number in '" + std::string(whole) + "'");
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw UsageError("malformed number in '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    static const std::regex real_only("([+-]?" + kNumber + ")");
    static const std::regex imag_only("([+-]?)(" + kNumber + ")?i");
    static const std::regex both("([+-]?" + kNumber + ")([+-])(" + kNumber + ")?i");

    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, real_only)) return {to_double(m[1].str(), text), 0.0};
    if (std::regex_match(s, m, imag_only)) {
        const double mag = m[2].matched ? to_double(m[2].str(), text) : 1.0;
        return {0.0, m[1].str() == "-" ? -mag : mag};
    }
    if (std::regex_match(s, m, both)) {
        const double re = to_double(m[1].str(), text);
        const double mag = m[3].matched ? to_double(m[3].str(), text) : 1.0;
        return {re, m[2].str() == "-" ? -mag : mag};
    }
    throw UsageError("cannot parse complex literal '" + s + "'");
}

double parse_real(std::string_view text) {
    const Complex c = parse_complex(text);
    if (c.imag() != 0.0) throw UsageError("expected a real number, got '" + std::string(text) + "'");
    return c.real();
}

std::vector<double> parse_range(std::string_view text) {
    static const std::regex range("([+-]?" + kNumber + "):([+-]?" + kNumber + "):(\\d+)");
    const std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, range)) {
        throw UsageError("malformed range '" + s + "', expected start:stop:count");
    }
    const double start = to_double(m[1].str(), text);
    const double stop = to_double(m[2].str(), text);
    const std::string count_text = m[3].str();
    if (count_text.size() > 9) throw UsageError("range count too large in '" + s + "'");
    const long count = std::stol(count_text);
    if (count < 1) throw UsageError("range count must be >= 1 in '" + s + "'");

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(start);
        return out;
    }
    for (long i = 0; i < count; ++i) {
        out.push_back(i == count - 1 ? stop
                                     : start + (stop - start) * static_cast<double>(i) /
                                                   static_cast<double>(count - 1));
    }
    return out;
}

}  // namespace hurwitz::cli
