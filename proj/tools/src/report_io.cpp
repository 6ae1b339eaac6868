#include "hurwitz_cli/report_io.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <utility>

#include <hurwitz/errors.hpp>

namespace hurwitz::cli {

using nlohmann::json;

namespace {

template <typename E, std::size_t N>
std::string enum_name(E v, const std::array<std::pair<E, const char*>, N>& names) {
    for (const auto& [e, n] : names) {
        if (e == v) return n;
    }
    throw UsageError("unnamed enum value");
}

template <typename E, std::size_t N>
E enum_value(const std::string& s, const std::array<std::pair<E, const char*>, N>& names) {
    for (const auto& [e, n] : names) {
        if (s == n) return e;
    }
    throw UsageError("unknown enum name '" + s + "'");
}

const std::array<std::pair<QuadratureSpec::Method, const char*>, 2> kMethods = {{
    {QuadratureSpec::Method::double_exponential, "double_exponential"},
    {QuadratureSpec::Method::adaptive_subdivision, "adaptive_subdivision"},
}};

const std::array<std::pair<ConfluentParams::URoute, const char*>, 3> kRoutes = {{
    {ConfluentParams::URoute::laplace_integral, "laplace_integral"},
    {ConfluentParams::URoute::incomplete_gamma, "incomplete_gamma"},
    {ConfluentParams::URoute::automatic, "automatic"},
}};

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw UsageError("expected [re, im]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json quad_to_json(const QuadratureSpec& q) {
    return {{"method", enum_name(q.method, kMethods)},
            {"max_level", q.max_level},
            {"target_abs_tol", q.target_abs_tol},
            {"target_rel_tol", q.target_rel_tol}};
}

QuadratureSpec quad_from_json(const json& j) {
    QuadratureSpec q;
    q.method = enum_value(j.at("method").get<std::string>(), kMethods);
    q.max_level = j.at("max_level").get<int>();
    q.target_abs_tol = j.at("target_abs_tol").get<double>();
    q.target_rel_tol = j.at("target_rel_tol").get<double>();
    return q;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json params_to_json(const EvalParams& p) {
    return {{"em_order", p.em_order},
            {"em_shift", p.em_shift},
            {"series_cap", p.series_cap},
            {"l_cap", p.l_cap},
            {"tol_abs", p.tol_abs},
            {"quad", quad_to_json(p.quad)},
            {"confluent",
             {{"series_cap", p.confluent.series_cap},
              {"term_tol", p.confluent.term_tol},
              {"u_route", enum_name(p.confluent.u_route, kRoutes)},
              {"quad", quad_to_json(p.confluent.quad)}}}};
}

EvalParams params_from_json(const json& j) {
    EvalParams p;
    p.em_order = j.at("em_order").get<int>();
    p.em_shift = j.at("em_shift").get<int>();
    p.series_cap = j.at("series_cap").get<long>();
    p.l_cap = j.at("l_cap").get<long>();
    p.tol_abs = j.at("tol_abs").get<double>();
    p.quad = quad_from_json(j.at("quad"));
    const json& c = j.at("confluent");
    p.confluent.series_cap = c.at("series_cap").get<long>();
    p.confluent.term_tol = c.at("term_tol").get<double>();
    p.confluent.u_route = enum_value(c.at("u_route").get<std::string>(), kRoutes);
    p.confluent.quad = quad_from_json(c.at("quad"));
    return p;
}

json report_to_json(const ResidualReport& r) {
    json points = json::array();
    for (const auto& pt : r.points) {
        json jp = {{"s", complex_to_json(pt.s)},
                   {"z", pt.z},
                   {"lhs", complex_to_json(pt.lhs)},
                   {"rhs", complex_to_json(pt.rhs)},
                   {"abs_residual", pt.abs_residual},
                   {"rel_residual", pt.rel_residual},
                   {"error_bound", pt.error_bound}};
        if (!pt.label.empty()) jp["label"] = pt.label;
        if (pt.error) jp["error"] = *pt.error;
        if (pt.diagnostic) {
            jp["diagnostic"] = complex_to_json(*pt.diagnostic);
            jp["diagnostic_bound"] = pt.diagnostic_bound;
        }
        points.push_back(std::move(jp));
    }
    json out = {{"check_id", r.check_id},
                {"pass", r.pass},
                {"tolerance", r.tolerance},
                {"max_abs_residual", r.max_abs},
                {"max_rel_residual", r.max_rel},
                {"params", params_to_json(r.params)},
                {"points", std::move(points)},
                {"timestamp", r.timestamp}};
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

ResidualReport report_from_json(const json& j) {
    ResidualReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.tolerance = j.at("tolerance").get<double>();
    r.max_abs = j.at("max_abs_residual").get<double>();
    r.max_rel = j.at("max_rel_residual").get<double>();
    r.params = params_from_json(j.at("params"));
    r.timestamp = j.at("timestamp").get<std::string>();
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    for (const json& jp : j.at("points")) {
        ResidualPoint pt;
        pt.s = complex_from_json(jp.at("s"));
        pt.z = jp.at("z").get<double>();
        pt.lhs = complex_from_json(jp.at("lhs"));
        pt.rhs = complex_from_json(jp.at("rhs"));
        pt.abs_residual = jp.at("abs_residual").get<double>();
        pt.rel_residual = jp.at("rel_residual").get<double>();
        pt.error_bound = jp.at("error_bound").get<double>();
        if (jp.contains("label")) pt.label = jp.at("label").get<std::string>();
        if (jp.contains("error")) pt.error = jp.at("error").get<std::string>();
        if (jp.contains("diagnostic")) {
            pt.diagnostic = complex_from_json(jp.at("diagnostic"));
            pt.diagnostic_bound = jp.at("diagnostic_bound").get<double>();
        }
        r.points.push_back(std::move(pt));
    }
    return r;
}

json reports_to_json(const std::vector<ResidualReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_to_json(r));
    return out;
}

std::vector<ResidualReport> reports_from_json(const json& j) {
    std::vector<ResidualReport> out;
    for (const json& r : j) out.push_back(report_from_json(r));
    return out;
}

std::string reports_to_csv(const std::vector<ResidualReport>& reports) {
    std::ostringstream os;
    os << "check_id,pass,tolerance,s_re,s_im,z,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,"
          "rel_residual,error_bound,diagnostic_re,diagnostic_im,label,error\n";
    for (const auto& r : reports) {
        for (const auto& pt : r.points) {
            os << r.check_id << ',' << (r.pass ? "true" : "false") << ','
               << format_double(r.tolerance) << ',' << format_double(pt.s.real()) << ','
               << format_double(pt.s.imag()) << ',' << format_double(pt.z) << ','
               << format_double(pt.lhs.real()) << ',' << format_double(pt.lhs.imag()) << ','
               << format_double(pt.rhs.real()) << ',' << format_double(pt.rhs.imag()) << ','
               << format_double(pt.abs_residual) << ',' << format_double(pt.rel_residual) << ','
               << format_double(pt.error_bound) << ',';
            if (pt.diagnostic) {
                os << format_double(pt.diagnostic->real()) << ','
                   << format_double(pt.diagnostic->imag());
            } else {
                os << ',';
            }
            os << ',' << csv_field(pt.label) << ',' << csv_field(pt.error.value_or("")) << '\n';
        }
    }
    return os.str();
}

std::string reports_to_human(const std::vector<ResidualReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        std::size_t errors = 0;
        for (const auto& pt : r.points) errors += pt.error ? 1 : 0;
        os << (r.pass ? "PASS " : "FAIL ") << r.check_id << ": " << r.points.size()
           << " points, max_abs " << format_double(r.max_abs) << ", max_rel "
           << format_double(r.max_rel) << " (tolerance " << format_double(r.tolerance) << ")";
        if (errors > 0) os << ", " << errors << " point errors";
        os << '\n';
        for (const auto& pt : r.points) {
            if (pt.error) {
                os << "    s=" << format_double(pt.s.real()) << (pt.s.imag() < 0 ? "" : "+")
                   << format_double(pt.s.imag()) << "i z=" << format_double(pt.z);
                if (!pt.label.empty()) os << " [" << pt.label << "]";
                os << ": " << *pt.error << '\n';
            }
        }
        for (const auto& note : r.notes) os << "    note: " << note << '\n';
    }
    return os.str();
}

}  // namespace hurwitz::cli
