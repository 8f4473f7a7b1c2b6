#pragma once

// Invariant suites behind `diskop verify`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "diskop/report.hpp"

namespace diskop {

enum class Suite { All, Specfun, Profiles, Operators, Norms, Counterexamples };

Suite parse_suite(std::string_view name);
std::string to_string(Suite s);

struct VerifyOptions {
    int radial_nodes = 256;
    int angular_nodes = 512;
    /// Exclusion radius of the annulus strategy.
    double epsilon = 0.05;
    /// When positive, replaces the tolerance of every row.
    double tol = 0.0;
    std::uint64_t seed = 42;
};

/// Rows in a fixed order; quadrature checks are part of the operators suite.
std::vector<ReportRow> run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace diskop
