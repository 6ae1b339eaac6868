#pragma once

// Serialization of residual reports. JSON is lossless (doubles are written
// with round-trip precision); CSV flattens one row per point.

#include <string>
#include <vector>

#include <json.hpp>

#include <hurwitz/verify.hpp>

namespace hurwitz::cli {

nlohmann::json params_to_json(const EvalParams& p);
EvalParams params_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ResidualReport& r);
ResidualReport report_from_json(const nlohmann::json& j);

nlohmann::json reports_to_json(const std::vector<ResidualReport>& reports);
std::vector<ResidualReport> reports_from_json(const nlohmann::json& j);

std::string reports_to_csv(const std::vector<ResidualReport>& reports);
std::string reports_to_human(const std::vector<ResidualReport>& reports);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

}  // namespace hurwitz::cli
