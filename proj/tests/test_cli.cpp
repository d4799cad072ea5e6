#include <doctest.h>

#include <regex>
#include <sstream>

#include "apery/runner.hpp"

using namespace apery;

namespace {

double dd(const Real& r) { return static_cast<double>(r); }

std::string strip_timing(std::string text) {
    text = std::regex_replace(text, std::regex("\"elapsed_ms\": [^,\\n]*"),
                              "\"elapsed_ms\": 0");
    return text;
}

std::string render(const RunConfig& config) {
    auto reports = run_suite(config);
    std::ostringstream os;
    write_reports(os, reports, config);
    return os.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("root literals parse and bad ones are rejected") {
    CHECK(parse_root("1/2").numer == 1);
    CHECK(parse_root("1/2").order == 2);
    CHECK(parse_root("-1/3").order == 3);
    CHECK(parse_root("3/5").numer == 3);
    CHECK_THROWS_AS(parse_root("0.5"), ConfigError);
    CHECK_THROWS_AS(parse_root("1/0"), ConfigError);
    CHECK_THROWS_AS(parse_root("x"), ConfigError);
}

TEST_CASE("complex literals parse and bad ones are rejected") {
    auto ctx = PrecisionContext::with_digits(50);
    ScopedPrecision sp(ctx.eval_digits());
    CHECK(dd(abs(parse_complex("0.25") - Complex(Real(1) / 4))) <= 1e-40);
    CHECK(dd(abs(parse_complex("1/3") - Complex(Real(1) / 3))) <= 1e-40);
    Complex z = parse_complex("0.3+0.2i");
    CHECK(dd(abs(z - Complex(Real(3) / 10, Real(2) / 10))) <= 1e-40);
    Complex w = parse_complex("-0.5-0.25i");
    CHECK(dd(abs(w - Complex(Real(-1) / 2, Real(-1) / 4))) <= 1e-40);
    CHECK(dd(abs(parse_complex("2i") - Complex(Real(0), Real(2)))) <= 1e-40);
    CHECK_THROWS_AS(parse_complex("abc"), ConfigError);
    CHECK_THROWS_AS(parse_complex(""), ConfigError);
}

TEST_CASE("the divergent corner is a configuration error with a clear message") {
    auto ctx = PrecisionContext::with_digits(30);
    ScopedPrecision sp(ctx.eval_digits());
    RunConfig config;
    config.q = 1;
    config.x_root = RootOfUnity::one();
    try {
        resolve_grid(IdentityId::THM21, config);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("(q, x) = (1, 1)") != std::string::npos);
    }
}

TEST_CASE("overrides collapse the grid to a single point") {
    auto ctx = PrecisionContext::with_digits(30);
    ScopedPrecision sp(ctx.eval_digits());
    RunConfig config;
    config.q = 2;
    config.a = Complex(Real(1) / 3);
    config.x_root = RootOfUnity::minus_one();
    auto grid = resolve_grid(IdentityId::THM21, config);
    CHECK(grid.size() == 1);
    CHECK(*grid[0].q == 2);
}

TEST_CASE("report output is deterministic up to timing") {
    RunConfig config;
    config.ids = {IdentityId::ZETA3_APERY, IdentityId::LI2_HALF};
    config.digits = 20;
    SUBCASE("json") {
        config.format = ReportFormat::Json;
        CHECK(strip_timing(render(config)) == strip_timing(render(config)));
    }
    SUBCASE("csv") {
        config.format = ReportFormat::Csv;
        auto strip_csv = [](const std::string& text) {
            std::istringstream in(text);
            std::ostringstream out;
            std::string line;
            while (std::getline(in, line)) {
                // elapsed_ms is the 20th column
                int col = 0;
                std::string kept;
                std::istringstream fields(line);
                std::string field;
                while (std::getline(fields, field, ',')) {
                    if (++col == 20)
                        field = "0";
                    kept += field + ",";
                }
                out << kept << "\n";
            }
            return out.str();
        };
        CHECK(strip_csv(render(config)) == strip_csv(render(config)));
    }
}

TEST_CASE("json output carries the schema and one record per grid point") {
    RunConfig config;
    config.ids = {IdentityId::PARAM_CB_X1};
    config.digits = 20;
    std::string text = render(config);
    CHECK(text.find("\"schema\": \"apery-verify/1\"") != std::string::npos);
    auto ctx = PrecisionContext::with_digits(config.digits);
    ScopedPrecision sp(ctx.eval_digits());
    size_t grid = resolve_grid(IdentityId::PARAM_CB_X1, config).size();
    size_t records = 0;
    for (size_t pos = text.find("\"id\":"); pos != std::string::npos;
         pos = text.find("\"id\":", pos + 1))
        ++records;
    CHECK(records == grid);
}

TEST_CASE("csv output has the documented header and row count") {
    RunConfig config;
    config.ids = {IdentityId::PARAM_CB_X1};
    config.digits = 20;
    config.format = ReportFormat::Csv;
    std::string text = render(config);
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "id,q,p,m,a_re,a_im,b_re,b_im,x,x_val_re,x_val_im,lhs_re,lhs_im,"
          "rhs_re,rhs_im,residual,residual_mode,tolerance,terms_used,"
          "elapsed_ms,pass,error");
    size_t rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            ++rows;
    auto ctx = PrecisionContext::with_digits(config.digits);
    ScopedPrecision sp(ctx.eval_digits());
    CHECK(rows == resolve_grid(IdentityId::PARAM_CB_X1, config).size());
}

TEST_CASE("exit codes reflect pass, fail, and config errors") {
    RunConfig ok;
    ok.ids = {IdentityId::LI2_HALF};
    ok.digits = 20;
    ok.out_path = "/dev/null";
    CHECK(run(ok) == 0);

    RunConfig failing = ok;
    failing.tolerance_override = 1e-300; // unattainable: forces a failure
    CHECK(run(failing) == 1);

    RunConfig bad = ok;
    bad.digits = 10;
    CHECK_THROWS_AS(run(bad), ConfigError);

    RunConfig unwritable = ok;
    unwritable.out_path = "/nonexistent-dir/report.json";
    CHECK_THROWS_AS(run(unwritable), ConfigError);
}

TEST_CASE("parallel execution matches the serial record order") {
    RunConfig serial;
    serial.ids = {IdentityId::PARAM_CB_X1, IdentityId::ZETA3_APERY};
    serial.digits = 20;
    RunConfig parallel = serial;
    parallel.jobs = 4;
    CHECK(strip_timing(render(serial)) == strip_timing(render(parallel)));
}

} // TEST_SUITE
