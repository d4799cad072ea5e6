#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apery/runner.hpp"

using namespace apery;

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of Apery-like series identities"};

    std::vector<std::string> identity_names;
    bool list = false;
    unsigned digits = 30;
    double tolerance = 0;
    std::string format = "json";
    std::string out_path;
    unsigned jobs = 1;
    unsigned q_val = 0, p_val = 0;
    long m_val = 0;
    std::string a_str, b_str, x_str, fcx_str;

    app.add_option("--identity", identity_names,
                   "Identity name(s) to verify, or \"all\" (repeatable)");
    app.add_flag("--list", list, "Print the identity catalog and exit");
    app.add_option("--digits", digits, "Decimal working precision (>= 20)")
        ->check(CLI::Range(20u, 1000u));
    app.add_option("--tolerance", tolerance, "Residual tolerance override (> 0)");
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "Report output path (default: stdout)");
    app.add_option("--jobs", jobs, "Worker thread count (>= 1)")
        ->check(CLI::Range(1u, 256u));
    app.add_option("--q", q_val, "Restrict the q axis of the grid");
    app.add_option("--p", p_val, "Restrict the p axis of the grid");
    app.add_option("--m", m_val, "Restrict the m axis of the grid");
    app.add_option("--a", a_str, "Restrict the a axis (decimal, p/q, or re+im i)");
    app.add_option("--b", b_str, "Restrict the b axis");
    app.add_option("--x", x_str, "Restrict the root-of-unity axis, as \"p/N\"");
    app.add_option("--fc-x", fcx_str, "Restrict the series argument axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list) {
            for (const auto& info : identity_catalog())
                std::cout << info.name << "\t" << info.anchor << "\t" << info.grid_note
                          << "\n";
            return 0;
        }

        RunConfig config;
        config.digits = digits;
        if (tolerance != 0)
            config.tolerance_override = tolerance;
        config.format = (format == "csv") ? ReportFormat::Csv : ReportFormat::Json;
        config.out_path = out_path;
        config.jobs = jobs;

        for (const auto& name : identity_names) {
            if (name == "all") {
                config.ids.clear();
                break;
            }
            auto id = identity_from_name(name);
            if (!id)
                throw ConfigError("unknown identity \"" + name + "\"; see --list");
            config.ids.push_back(*id);
        }

        // Grid values must be constructed at evaluation precision.
        auto ctx = PrecisionContext::with_digits(digits);
        ScopedPrecision scope(ctx.eval_digits());
        if (q_val != 0)
            config.q = q_val;
        if (p_val != 0)
            config.p = p_val;
        if (m_val != 0)
            config.m = m_val;
        if (!a_str.empty())
            config.a = parse_complex(a_str);
        if (!b_str.empty())
            config.b = parse_complex(b_str);
        if (!x_str.empty())
            config.x_root = parse_root(x_str);
        if (!fcx_str.empty())
            config.fc_x = parse_complex(fcx_str);

        return run(config);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
