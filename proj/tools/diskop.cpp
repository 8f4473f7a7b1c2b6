// diskop: norm catalog queries, verification suites and tables.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diskop/errors.hpp"
#include "diskop/norms.hpp"
#include "diskop/operators.hpp"
#include "diskop/profiles.hpp"
#include "diskop/report.hpp"
#include "diskop/verify.hpp"

namespace {

using namespace diskop;

constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_p(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "infinity") return kInf;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw ConfigurationError("cannot parse exponent '" + text + "' (expected a number or inf)");
    }
    return v;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(parse_p(item));
    }
    if (out.empty()) throw ConfigurationError("empty grid");
    return out;
}

std::string format_p(double p) { return std::isinf(p) ? "inf" : format_number(p); }

struct TableRow {
    double p;
    double rho;
    double value;
    std::string kind;
};

std::string render_table(const std::vector<TableRow>& rows, bool with_rho, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row{{"p", format_p(r.p)}, {"value", format_number(r.value)}, {"kind", r.kind}};
            if (with_rho) row["rho"] = format_number(r.rho);
            arr.push_back(row);
        }
        out << arr.dump(2) << '\n';
        return out.str();
    }
    out << (with_rho ? "p,rho,value,kind\n" : "p,value,kind\n");
    for (const auto& r : rows) {
        out << format_p(r.p) << ',';
        if (with_rho) out << format_number(r.rho) << ',';
        out << format_number(r.value) << ',' << r.kind << '\n';
    }
    return out.str();
}

std::string render_norm(const NormQuery& q, const NormResult& r, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Text:
            out << "operator:       " << to_string(q.op) << '\n'
                << "p:              " << format_p(q.source_p) << '\n'
                << "target:         " << to_string(q.target) << '\n'
                << "value:          " << format_number(r.value) << '\n'
                << "kind:           " << to_string(r.kind) << '\n'
                << "provenance:     " << r.provenance << '\n'
                << "error_estimate: " << format_number(r.error_estimate) << '\n';
            break;
        case OutputFormat::Csv:
            out << "op,p,target,value,kind,error_estimate,provenance\n"
                << to_string(q.op) << ',' << format_p(q.source_p) << ',' << to_string(q.target) << ','
                << format_number(r.value) << ',' << to_string(r.kind) << ',' << format_number(r.error_estimate)
                << ",\"" << r.provenance << "\"\n";
            break;
        case OutputFormat::Json: {
            nlohmann::json j{{"op", to_string(q.op)},
                             {"p", format_p(q.source_p)},
                             {"target", to_string(q.target)},
                             {"value", format_number(r.value)},
                             {"kind", to_string(r.kind)},
                             {"provenance", r.provenance},
                             {"error_estimate", format_number(r.error_estimate)}};
            out << j.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigurationError("cannot open output file '" + path + "'");
    file << text;
}

std::vector<TableRow> interpolation_table(const std::vector<double>& grid) {
    std::vector<TableRow> rows;
    for (double p : grid) {
        if (!(p >= 1.0)) throw DomainError("interpolation table: p = " + format_p(p) + " violates p in [1, inf]");
        const auto r = riesz_thorin_bound(p);
        rows.push_back({p, 0.0, r.value, to_string(r.kind)});
    }
    return rows;
}

std::vector<TableRow> lp_linf_table(OperatorId op, const std::vector<double>& grid) {
    std::vector<TableRow> rows;
    for (double p : grid) {
        if (!(p > 2.0)) {
            throw DomainError("lp_linf_curves: p = " + format_p(p) + " violates the hypothesis p > 2 (or p = inf)");
        }
        const auto r = closed_form_norm({op, p, NormTarget::LInfinity});
        rows.push_back({p, 0.0, r.value, to_string(r.kind)});
    }
    return rows;
}

std::vector<TableRow> profile_table(const std::string& profile, const std::vector<double>& grid,
                                    const std::vector<double>& rhos) {
    std::vector<TableRow> rows;
    for (double p : grid) {
        if (!(p > 2.0)) throw DomainError("profiles: p = " + format_p(p) + " violates the hypothesis p > 2 (or p = inf)");
        const double q = ConjugateExponents::from_p(p).q();
        for (double rho : rhos) {
            if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("profiles: rho = " + format_number(rho) + " lies outside [0, 1]");
            double v = 0.0;
            if (profile == "K") v = profile_K(ConjugateExponents::from_p(p), rho);
            else if (profile == "M") v = profile_M(q, rho);
            else if (profile == "N") v = profile_N(q, rho, 1e-10).value;
            else if (profile == "F") v = profile_F(q, rho * rho);
            else throw ConfigurationError("unknown profile '" + profile + "' (expected K, M, N or F)");
            rows.push_back({p, rho, v, profile + "_PROFILE"});
        }
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Norms of the Cauchy transform and related operators on the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format;
    std::string out_path;
    VerifyOptions opts;
    app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--radial-nodes", opts.radial_nodes, "radial Gauss-Legendre nodes")->capture_default_str();
    app.add_option("--angular-nodes", opts.angular_nodes, "angular trapezoid nodes")->capture_default_str();
    app.add_option("--epsilon", opts.epsilon, "exclusion radius of the annulus strategy")->capture_default_str();
    app.add_option("--tol", opts.tol, "replace every row tolerance (verify)");
    app.add_option("--seed", opts.seed, "seed for sampled checks")->capture_default_str();

    auto* norm = app.add_subcommand("norm", "query the norm catalog");
    std::string op_name = "cauchy";
    std::string p_text;
    std::string target = "same";
    norm->add_option("--op", op_name, "cauchy, bergman, j0, j0star or cdelta")->required();
    norm->add_option("--p", p_text, "source exponent (number or inf)")->required();
    norm->add_option("--target", target, "same or linf")->check(CLI::IsMember({"same", "linf"}));

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "all, specfun, profiles, operators, norms or counterexamples");

    auto* table = app.add_subcommand("table", "emit a table of norms or profiles");
    std::string kind;
    std::string grid_text;
    std::string rho_text = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
    std::string profile = "K";
    std::string table_op = "cauchy";
    table->add_option("kind", kind, "interpolation, lp_linf_curves or profiles")
        ->required()
        ->check(CLI::IsMember({"interpolation", "lp_linf_curves", "profiles"}));
    table->add_option("--grid", grid_text, "comma-separated p values");
    table->add_option("--rho-grid", rho_text, "comma-separated radii (profiles)");
    table->add_option("--profile", profile, "K, M, N or F (profiles)");
    table->add_option("--op", table_op, "operator (lp_linf_curves)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*norm) {
            const NormQuery q{parse_operator(op_name), parse_p(p_text),
                              target == "linf" ? NormTarget::LInfinity : NormTarget::SameP};
            const auto r = closed_form_norm(q);
            emit(render_norm(q, r, parse_format(format.empty() ? "text" : format)), out_path);
            return 0;
        }
        if (*verify) {
            const auto rows = run_suite(parse_suite(suite), opts);
            emit(render_rows(rows, parse_format(format.empty() ? "text" : format)), out_path);
            for (const auto& r : rows) {
                if (!r.pass) return 1;
            }
            return 0;
        }
        const auto fmt = parse_format(format.empty() ? "csv" : format);
        if (fmt == OutputFormat::Text) throw ConfigurationError("tables are emitted as csv or json");
        std::vector<TableRow> rows;
        bool with_rho = false;
        if (kind == "interpolation") {
            rows = interpolation_table(parse_grid(grid_text.empty() ? "1,1.5,2,3,4,inf" : grid_text));
        } else if (kind == "lp_linf_curves") {
            rows = lp_linf_table(parse_operator(table_op), parse_grid(grid_text.empty() ? "3,4,10,inf" : grid_text));
        } else {
            with_rho = true;
            rows = profile_table(profile, parse_grid(grid_text.empty() ? "3,4,10" : grid_text), parse_grid(rho_text));
        }
        emit(render_table(rows, with_rho, fmt), out_path);
        return 0;
    } catch (const Error& e) {
        std::cerr << "diskop: " << e.what() << '\n';
        return 2;
    }
}
