#include "hurwitz_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hurwitz/confluent.hpp>
#include <hurwitz/errors.hpp>
#include <hurwitz/verify.hpp>
#include <hurwitz/zeta.hpp>

#include "hurwitz_cli/parse.hpp"
#include "hurwitz_cli/report_io.hpp"

namespace hurwitz::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr const char* kVerifyHelp = R"(Check ids:
  hurwitz      zeta(s,z) by Euler-Maclaurin against the polylogarithm side of
               the Hurwitz relation. Default grid
               s in {-0.5, -1.5, -2.5, -3.5, -0.5+-2i, -1.5+-2i, -2.5+-2i},
               z in {0.1, 0.25, 0.5, 0.75, 0.9}; tolerance 1e-8 relative.
  riemann-fe   zeta(s) against 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
               at s in {-0.5, -1, -1.5, -2, -2.5}; tolerance 1e-9.
  via-u        U-sum representation against Euler-Maclaurin at
               s in {2, 0.5, 0, 0.5+i}, z in {0.25, 0.5, 0.75}; tolerance 1e-6.
  connection   U against the connection formula at 100 seeded random
               (alpha, gamma, x) plus 5 points (1, 1-s, -2 pi i l z);
               tolerance 1e-8.
  vanishing    l-sum identity, gated through the Hurwitz residual on the
               hurwitz grid; the direct sawtooth evaluation is reported ungated.
  asymptotics  |x^alpha U - 1| strictly decreasing along |x| = 10..1e4.
  fourier      partial Fourier sums of the periodic B_2, error <= C/N, C <= 1.
  all          every check above, in this order.

--grid-file takes JSON {"s_points": [...], "z_points": [...]}; s entries are
[re, im] pairs, numbers, or complex literals. It replaces the grid of
hurwitz, via-u and vanishing.)";

struct EvalOptions {
    std::string function;
    std::vector<std::string> args;
    int em_order = EvalParams{}.em_order;
    int em_shift = EvalParams{}.em_shift;
    long series_cap = EvalParams{}.series_cap;
    long l_cap = EvalParams{}.l_cap;
    double tol_abs = EvalParams{}.tol_abs;
    std::string u_route = "auto";
    std::string format = "human";
};

struct VerifyOptions {
    std::vector<std::string> ids;
    std::optional<double> tol;
    std::string grid_file;
    std::uint64_t seed = 42;
    std::string format = "human";
    std::string out;
    long l_cap = EvalParams{}.l_cap;
    int em_order = EvalParams{}.em_order;
};

struct SweepOptions {
    std::string function;
    std::string s_re;
    std::string s_im = "0:0:1";
    std::string z;
    std::string format = "csv";
    std::string out;
    long l_cap = EvalParams{}.l_cap;
    int em_order = EvalParams{}.em_order;
};

struct Evaluation {
    Complex value;
    std::optional<double> error_bound;
    std::string route;
};

ConfluentParams::URoute parse_route(const std::string& name) {
    if (name == "auto") return ConfluentParams::URoute::automatic;
    if (name == "integral") return ConfluentParams::URoute::laplace_integral;
    if (name == "gamma") return ConfluentParams::URoute::incomplete_gamma;
    throw UsageError("unknown U route '" + name + "'");
}

std::string format_complex(Complex c) {
    std::string im = format_double(c.imag());
    if (im.front() != '-') im = "+" + im;
    return format_double(c.real()) + im + "i";
}

Evaluation from_estimate(const Estimate& e) {
    return {e.value, e.error_bound, std::string(e.route)};
}

// Every z-based zeta function shares this signature.
using ZetaFn = Estimate (*)(Complex, double, const EvalParams&);

ZetaFn zeta_function(const std::string& name) {
    if (name == "zeta") return &hurwitz_em;
    if (name == "zeta-direct") return &hurwitz_direct;
    if (name == "zeta-via-u") return &hurwitz_via_u;
    if (name == "polylog") return &polylog_L;
    return nullptr;
}

void require_arity(const EvalOptions& o, std::size_t n) {
    if (o.args.size() != n) {
        throw UsageError(o.function + " takes " + std::to_string(n) + " argument" +
                         (n == 1 ? "" : "s") + ", got " + std::to_string(o.args.size()));
    }
}

Evaluation evaluate(const EvalOptions& o) {
    EvalParams p;
    p.em_order = o.em_order;
    p.em_shift = o.em_shift;
    p.series_cap = o.series_cap;
    p.l_cap = o.l_cap;
    p.tol_abs = o.tol_abs;
    p.confluent.u_route = parse_route(o.u_route);
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    if (const ZetaFn fn = zeta_function(o.function)) {
        require_arity(o, 2);
        const Complex s = parse_complex(o.args[0]);
        const double z = parse_real(o.args[1]);
        return from_estimate(fn(s, z, p));
    }
    if (o.function == "riemann") {
        require_arity(o, 1);
        return from_estimate(riemann_zeta(parse_complex(o.args[0]), p));
    }
    if (o.function == "gamma") {
        require_arity(o, 1);
        return {gamma(parse_complex(o.args[0])), std::nullopt, "lanczos"};
    }
    if (o.function == "kummer" || o.function == "tricomi") {
        require_arity(o, 3);
        const Complex alpha = parse_complex(o.args[0]);
        const Complex gamma_p = parse_complex(o.args[1]);
        const Complex x = parse_complex(o.args[2]);
        if (o.function == "kummer") return {kummer_m(alpha, gamma_p, x, p.confluent), std::nullopt, "series"};
        const bool closed_form =
            p.confluent.u_route == ConfluentParams::URoute::incomplete_gamma ||
            (p.confluent.u_route == ConfluentParams::URoute::automatic && alpha == Complex(1.0, 0.0));
        return {tricomi_u(alpha, gamma_p, x, p.confluent), std::nullopt,
                closed_form ? "incomplete-gamma" : "laplace-integral"};
    }
    throw UsageError("unknown function '" + o.function + "'");
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
    const Evaluation e = evaluate(o);
    if (o.format == "json") {
        nlohmann::json j = {{"function", o.function},
                            {"args", o.args},
                            {"value", {e.value.real(), e.value.imag()}},
                            {"error_bound", nullptr},
                            {"route", e.route}};
        if (e.error_bound) j["error_bound"] = *e.error_bound;
        out << j.dump(2) << '\n';
    } else {
        out << "value: " << format_complex(e.value) << '\n'
            << "error_bound: " << (e.error_bound ? format_double(*e.error_bound) : "n/a") << '\n'
            << "route: " << e.route << '\n';
    }
    return kExitOk;
}

std::vector<Complex> s_points_from_json(const nlohmann::json& j) {
    std::vector<Complex> out;
    for (const auto& item : j) {
        if (item.is_array()) {
            if (item.size() != 2) throw UsageError("grid file: s entry must be [re, im]");
            out.emplace_back(item.at(0).get<double>(), item.at(1).get<double>());
        } else if (item.is_number()) {
            out.emplace_back(item.get<double>(), 0.0);
        } else if (item.is_string()) {
            out.push_back(parse_complex(item.get<std::string>()));
        } else {
            throw UsageError("grid file: unsupported s entry");
        }
    }
    return out;
}

void load_grid_file(const std::string& path, SuiteOptions& suite) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open grid file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
        if (j.contains("s_points")) suite.s_points = s_points_from_json(j.at("s_points"));
        if (j.contains("z_points")) suite.z_points = j.at("z_points").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("grid file '" + path + "': " + e.what());
    }
    if (!suite.s_points && !suite.z_points) {
        throw UsageError("grid file '" + path + "' has neither s_points nor z_points");
    }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    file << text;
    if (!file) throw Error("IoError", "failed writing '" + path + "'");
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    SuiteOptions suite;
    suite.tol = o.tol;
    suite.seed = o.seed;
    suite.params.l_cap = o.l_cap;
    suite.params.em_order = o.em_order;
    try {
        suite.params.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    if (o.tol && !(*o.tol > 0.0)) throw UsageError("--tol must be positive");
    if (!o.grid_file.empty()) load_grid_file(o.grid_file, suite);

    const std::vector<ResidualReport> reports = run_suite(o.ids, suite);
    std::string text;
    if (o.format == "json") {
        text = reports_to_json(reports).dump(2) + "\n";
    } else if (o.format == "csv") {
        text = reports_to_csv(reports);
    } else {
        text = reports_to_human(reports);
    }
    write_output(text, o.out, out);
    for (const auto& r : reports) {
        if (!r.pass) return kExitFailure;
    }
    return kExitOk;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
    const ZetaFn fn = zeta_function(o.function);
    if (fn == nullptr) throw UsageError("unknown sweep function '" + o.function + "'");
    const std::vector<double> s_re = parse_range(o.s_re);
    const std::vector<double> s_im = parse_range(o.s_im);
    const std::vector<double> zs = parse_range(o.z);
    const bool open_right = o.function == "zeta-via-u";
    for (const double z : zs) {
        if (!(z > 0.0) || z > 1.0 || (open_right && z == 1.0)) {
            throw UsageError("z = " + format_double(z) + " outside " + (open_right ? "(0, 1)" : "(0, 1]"));
        }
    }
    EvalParams p;
    p.l_cap = o.l_cap;
    p.em_order = o.em_order;
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    struct Row {
        Complex s;
        double z = 0.0;
        Complex value{std::nan(""), std::nan("")};
        double error_bound = std::nan("");
        std::string route;
        std::optional<std::string> error;
    };
    std::vector<Row> rows;
    for (const double re : s_re) {
        for (const double im : s_im) {
            for (const double z : zs) {
                Row row;
                row.s = Complex(re, im);
                row.z = z;
                rows.push_back(std::move(row));
            }
        }
    }
    parallel_for(
        rows.size(),
        [&](std::size_t i) {
            Row& row = rows[i];
            try {
                const Estimate e = fn(row.s, row.z, p);
                row.value = e.value;
                row.error_bound = e.error_bound;
                row.route = e.route;
            } catch (const Error& e) {
                row.error = std::string(e.kind()) + ": " + e.what();
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        },
        worker_count());

    std::ostringstream text;
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Row& r : rows) {
            nlohmann::json j = {{"s", {r.s.real(), r.s.imag()}}, {"z", r.z}};
            if (r.error) {
                j["error"] = *r.error;
            } else {
                j["value"] = {r.value.real(), r.value.imag()};
                j["error_bound"] = r.error_bound;
                j["route"] = r.route;
            }
            arr.push_back(std::move(j));
        }
        text << arr.dump(2) << '\n';
    } else {
        text << "s_re,s_im,z,value_re,value_im,error_bound\n";
        for (const Row& r : rows) {
            text << format_double(r.s.real()) << ',' << format_double(r.s.imag()) << ','
                 << format_double(r.z) << ',' << format_double(r.value.real()) << ','
                 << format_double(r.value.imag()) << ',' << format_double(r.error_bound) << '\n';
        }
    }
    write_output(text.str(), o.out, out);

    int code = kExitOk;
    for (const Row& r : rows) {
        if (r.error) {
            err << "s=" << format_complex(r.s) << " z=" << format_double(r.z) << ": " << *r.error << '\n';
            code = kExitFailure;
        }
    }
    return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz zeta, polylogarithm and confluent hypergeometric evaluation and verification",
                 "hurwitz-lab"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    EvalOptions eval_opts;
    auto* eval = app.add_subcommand("eval", "Evaluate one function at one point");
    eval->add_option("function", eval_opts.function,
                     "zeta | zeta-direct | zeta-via-u | polylog (s z), riemann | gamma (s), "
                     "kummer | tricomi (alpha gamma x)")
        ->required()
        ->check(CLI::IsMember({"zeta", "zeta-direct", "zeta-via-u", "polylog", "riemann", "gamma",
                               "kummer", "tricomi"}));
    eval->add_option("args", eval_opts.args, "Complex literals: a, bi, a+bi, a-bi")->required();
    eval->add_option("--em-order", eval_opts.em_order, "Euler-Maclaurin order (even)")
        ->capture_default_str();
    eval->add_option("--em-shift", eval_opts.em_shift, "Terms summed before Euler-Maclaurin")
        ->capture_default_str();
    eval->add_option("--series-cap", eval_opts.series_cap, "Cap on directly summed terms")
        ->capture_default_str();
    eval->add_option("--l-cap", eval_opts.l_cap, "Truncation of the U-representation l-sum")
        ->capture_default_str();
    eval->add_option("--tol-abs", eval_opts.tol_abs, "Absolute truncation tolerance")
        ->capture_default_str();
    eval->add_option("--u-route", eval_opts.u_route, "Tricomi U route")
        ->check(CLI::IsMember({"auto", "integral", "gamma"}))
        ->capture_default_str();
    eval->add_option("--format", eval_opts.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run residual checks");
    verify->footer(kVerifyHelp);
    verify->add_option("ids", verify_opts.ids, "Check ids (see below)")->required();
    verify->add_option("--tol", verify_opts.tol, "Override the residual tolerance of the gated checks");
    verify->add_option("--grid-file", verify_opts.grid_file, "JSON file with s_points / z_points");
    verify->add_option("--seed", verify_opts.seed, "Seed for the connection sample")->capture_default_str();
    verify->add_option("--format", verify_opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    verify->add_option("--out", verify_opts.out, "Write the report here instead of stdout");
    verify->add_option("--l-cap", verify_opts.l_cap, "Truncation of the U-representation l-sum")
        ->capture_default_str();
    verify->add_option("--em-order", verify_opts.em_order, "Euler-Maclaurin order (even)")
        ->capture_default_str();

    SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Evaluate a zeta function over a grid");
    sweep->add_option("--function", sweep_opts.function, "zeta | zeta-direct | zeta-via-u | polylog")
        ->required();
    sweep->add_option("--s-re", sweep_opts.s_re, "start:stop:count")->required();
    sweep->add_option("--s-im", sweep_opts.s_im, "start:stop:count")->capture_default_str();
    sweep->add_option("--z", sweep_opts.z, "start:stop:count")->required();
    sweep->add_option("--format", sweep_opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--out", sweep_opts.out, "Write rows here instead of stdout");
    sweep->add_option("--l-cap", sweep_opts.l_cap, "Truncation of the U-representation l-sum")
        ->capture_default_str();
    sweep->add_option("--em-order", sweep_opts.em_order, "Euler-Maclaurin order (even)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(eval_opts, out);
        if (*verify) return cmd_verify(verify_opts, out);
        return cmd_sweep(sweep_opts, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownCheckId& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace hurwitz::cli
