#pragma once

// Verification rows and their text / CSV / JSON rendering.

#include <string>
#include <string_view>
#include <vector>

namespace diskop {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(std::string_view name);

struct ReportRow {
    std::string label;
    double claimed = 0.0;
    double computed = 0.0;
    /// |claimed - computed| for equality rows, the amount of violation for
    /// inequality rows.
    double abs_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string citation;

    std::string status() const { return pass ? "PASS" : "FAIL"; }
};

/// Row asserting computed == claimed within tolerance.
ReportRow equality_row(std::string label, double claimed, double computed, double tolerance, std::string citation);

/// Row asserting computed <= bound + tolerance.
ReportRow upper_bound_row(std::string label, double bound, double computed, double tolerance, std::string citation);

/// Row asserting computed >= bound - tolerance.
ReportRow lower_bound_row(std::string label, double bound, double computed, double tolerance, std::string citation);

/// Row for a property that holds or not; claimed 1, computed 1 or 0.
ReportRow boolean_row(std::string label, bool holds, std::string citation);

/// Ten significant digits, as used in every rendered number.
std::string format_number(double x);

std::string render_rows(const std::vector<ReportRow>& rows, OutputFormat format);

inline constexpr std::string_view kCsvHeader = "label,claimed,computed,abs_err,status,citation";

}  // namespace diskop
