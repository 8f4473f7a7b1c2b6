#include "diskop/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "diskop/errors.hpp"

namespace diskop {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

ReportRow finish(ReportRow row) {
    row.pass = std::isfinite(row.abs_err) && row.abs_err <= row.tolerance;
    return row;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw ConfigurationError("unknown format '" + std::string(name) + "' (expected text, csv or json)");
}

ReportRow equality_row(std::string label, double claimed, double computed, double tolerance, std::string citation) {
    return finish({std::move(label), claimed, computed, std::abs(claimed - computed), tolerance, false,
                   std::move(citation)});
}

ReportRow upper_bound_row(std::string label, double bound, double computed, double tolerance, std::string citation) {
    const double violation = std::isnan(computed) ? computed : std::max(0.0, computed - bound);
    return finish({std::move(label), bound, computed, violation, tolerance, false, std::move(citation)});
}

ReportRow lower_bound_row(std::string label, double bound, double computed, double tolerance, std::string citation) {
    const double violation = std::isnan(computed) ? computed : std::max(0.0, bound - computed);
    return finish({std::move(label), bound, computed, violation, tolerance, false, std::move(citation)});
}

ReportRow boolean_row(std::string label, bool holds, std::string citation) {
    return finish({std::move(label), 1.0, holds ? 1.0 : 0.0, holds ? 0.0 : 1.0, 0.0, false, std::move(citation)});
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string render_rows(const std::vector<ReportRow>& rows, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Csv:
            out << kCsvHeader << '\n';
            for (const auto& r : rows) {
                out << csv_field(r.label) << ',' << format_number(r.claimed) << ',' << format_number(r.computed) << ','
                    << format_number(r.abs_err) << ',' << r.status() << ',' << csv_field(r.citation) << '\n';
            }
            break;
        case OutputFormat::Json: {
            auto arr = nlohmann::json::array();
            for (const auto& r : rows) {
                arr.push_back({{"label", r.label},
                               {"claimed", format_number(r.claimed)},
                               {"computed", format_number(r.computed)},
                               {"abs_err", format_number(r.abs_err)},
                               {"tolerance", format_number(r.tolerance)},
                               {"status", r.status()},
                               {"citation", r.citation}});
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case OutputFormat::Text: {
            std::size_t pass = 0;
            for (const auto& r : rows) {
                pass += r.pass ? 1 : 0;
                out << '[' << r.status() << "] " << r.label << "\n       claimed " << format_number(r.claimed)
                    << "  computed " << format_number(r.computed) << "  abs_err " << format_number(r.abs_err)
                    << "  tol " << format_number(r.tolerance) << "\n       " << r.citation << '\n';
            }
            out << pass << '/' << rows.size() << " rows passed\n";
            break;
        }
    }
    return out.str();
}

}  // namespace diskop
