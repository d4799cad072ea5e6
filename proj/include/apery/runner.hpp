#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "apery/identities.hpp"

namespace apery {

// Configuration or parameter errors that must abort the run before any
// evaluation starts (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class ReportFormat { Json, Csv };

struct RunConfig {
    std::vector<IdentityId> ids; // empty means every catalog entry
    unsigned digits = 30;
    std::optional<double> tolerance_override;
    ReportFormat format = ReportFormat::Json;
    std::string out_path; // empty means stdout
    unsigned jobs = 1;

    // Grid overrides; each restricts the corresponding axis of the default
    // grid to a single value (ignored by identities without that axis).
    std::optional<unsigned> q;
    std::optional<unsigned> p;
    std::optional<long> m;
    std::optional<Complex> a;
    std::optional<Complex> b;
    std::optional<RootOfUnity> x_root;
    std::optional<Complex> fc_x;

    void validate() const;
};

// Default grid with the config's overrides applied and duplicates removed.
std::vector<IdentityParams> resolve_grid(IdentityId id, const RunConfig& config);

// Runs verify over every (identity, grid point), in parallel when
// config.jobs > 1; records keep catalog-then-grid order regardless of the
// worker schedule.
std::vector<IdentityReport> run_suite(const RunConfig& config);

// Serializes the reports; deterministic except for the elapsed_ms fields.
void write_reports(std::ostream& os, const std::vector<IdentityReport>& reports,
                   const RunConfig& config);

// Full pipeline: validate, run, write to the configured destination.
// Returns 0 when every record passes, 1 otherwise; throws ConfigError
// before evaluation on invalid configuration.
int run(const RunConfig& config);

// Parse "p/N" into a root of unity e^{2 pi i p/N}.
RootOfUnity parse_root(const std::string& text);

// Parse a real or "re+imi" / "re-imi" complex literal.
Complex parse_complex(const std::string& text);

} // namespace apery
