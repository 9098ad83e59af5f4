#pragma once

#include "edl/domain_grid.hpp"
#include "edl/elliptic_solver.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edl {

struct BoundaryConfig {
    double inner_value = 1.0;
    double inner_amplitude = 0.0;
    int inner_mode = 0;
    OuterCondition outer = OuterCondition::dirichlet_zero;
    std::optional<double> outer_exponent;  // defaults to the family's exact exponent, else 2/p
};

struct SolverConfig {
    double tol = 1e-10;
    std::size_t max_iter = 20000;
};

struct VerificationConfig {
    std::size_t n_levels = 24;
    double grad_floor = 0.0;  // <= 0: 1e-3 max |grad u|
    std::size_t tau_samples = 33;
    double level_margin = 0.02;
    std::size_t assumption_samples = 256;
    double cutoff_tol = 5e-2;
    double coarea_tol = 2e-2;
    double flux_growth_tol = 5e-2;
    double lemma_stability_tol = 2e-2;
    AssumptionTolerances assumptions;
};

struct AnalysisConfig {
    std::optional<double> p;         // defaults to family p, else 2
    std::vector<double> q;           // empty: {p, 2p, inf}
    double fit_inner = 1.0 / 8.0;
    double fit_outer = 3.0 / 4.0;
    std::size_t lorentz_levels = 64;
    double lorentz_range = 1e-4;
    bool truncation_trend = true;    // extra solves at R_out / 4 and R_out / 2
    double truncation_tol = 5e-2;
};

/// One [sweep] entry: "section.key = v1, v2, ...".
struct SweepAxis {
    std::string key;
    std::vector<std::string> values;
};

struct ExperimentConfig {
    DomainSpec domain;
    std::string family = "remark_optimal";
    std::map<std::string, double> family_params;
    BoundaryConfig boundary;
    SolverConfig solver;
    VerificationConfig verification;
    AnalysisConfig analysis;
    std::filesystem::path output_dir = "run";
    std::uint64_t seed = 0;
    std::vector<SweepAxis> sweep;

    /// Exponent p used by the verification and decay analysis.
    double analysis_p() const;
    /// Outer exponent for dirichlet_matched.
    double matched_exponent() const;
    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Parses INI text ("[section]" headers, "key = value" lines, '#' or ';' comments).
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Sets "section.key" from its textual value exactly as the config file would.
void set_config_value(ExperimentConfig& cfg, const std::string& dotted_key, const std::string& value);

/// Multiplies n_radial - 1 and n_angular by k (k >= 1).
void apply_grid_scale(ExperimentConfig& cfg, double k);

/// Canonical INI rendering of the effective configuration (sweep section omitted);
/// identical configs give identical text.
std::string canonical_text(const ExperimentConfig& cfg);

}  // namespace edl
