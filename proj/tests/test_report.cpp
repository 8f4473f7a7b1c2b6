#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "json.hpp"

#include "diskop/errors.hpp"
#include "diskop/report.hpp"
#include "diskop/verify.hpp"

using namespace diskop;

TEST_CASE("row builders") {
    const auto eq = equality_row("x", 1.0, 1.0 + 1e-9, 1e-8, "c");
    CHECK(eq.pass);
    CHECK(eq.abs_err == doctest::Approx(1e-9));
    CHECK_FALSE(equality_row("x", 1.0, 1.1, 1e-8, "c").pass);
    CHECK(upper_bound_row("u", 1.0, 0.5, 0.0, "c").pass);
    CHECK(upper_bound_row("u", 1.0, 1.2, 0.0, "c").abs_err == doctest::Approx(0.2));
    CHECK(lower_bound_row("l", 1.0, 1.5, 0.0, "c").pass);
    CHECK_FALSE(lower_bound_row("l", 1.0, 0.5, 0.1, "c").pass);
    CHECK_FALSE(equality_row("nan", 1.0, NAN, 1.0, "c").pass);
    CHECK(boolean_row("b", true, "c").status() == "PASS");
    CHECK(boolean_row("b", false, "c").status() == "FAIL");
}

TEST_CASE("number formatting uses ten significant digits") {
    CHECK(format_number(std::sqrt(0.5)) == "0.7071067812");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(INFINITY) == "inf");
}

TEST_CASE("rendering") {
    const std::vector<ReportRow> rows{equality_row("a, with comma", 1.0, 1.0, 0.0, "first \"quoted\""),
                                      equality_row("b", 1.0, 2.0, 0.0, "second")};
    const auto csv = render_rows(rows, OutputFormat::Csv);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    CHECK(csv.find("\"a, with comma\"") != std::string::npos);
    CHECK(csv.find("\"first \"\"quoted\"\"\"") != std::string::npos);
    const auto json = nlohmann::json::parse(render_rows(rows, OutputFormat::Json));
    REQUIRE(json.size() == 2);
    CHECK(json[1]["status"] == "FAIL");
    CHECK(json[0]["claimed"] == "1");
    const auto text = render_rows(rows, OutputFormat::Text);
    CHECK(text.find("[PASS] a, with comma") != std::string::npos);
    CHECK(text.find("1/2 rows passed") != std::string::npos);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK_THROWS_AS(parse_format("xml"), ConfigurationError);
}

TEST_CASE("suite names") {
    for (auto s : {Suite::All, Suite::Specfun, Suite::Profiles, Suite::Operators, Suite::Norms, Suite::Counterexamples}) {
        CHECK(parse_suite(to_string(s)) == s);
    }
    CHECK_THROWS_AS(parse_suite("everything"), ConfigurationError);
}

TEST_CASE("specfun suite passes and honours the tolerance override") {
    const auto rows = run_suite(Suite::Specfun);
    CHECK_FALSE(rows.empty());
    for (const auto& r : rows) CHECK_MESSAGE(r.pass, r.label);
    VerifyOptions strict;
    strict.tol = 1e-300;
    std::size_t failing = 0;
    for (const auto& r : run_suite(Suite::Specfun, strict)) failing += r.pass ? 0 : 1;
    CHECK(failing > 0);
}
