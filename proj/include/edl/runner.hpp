#pragma once

#include "edl/config.hpp"
#include "edl/elliptic_solver.hpp"
#include "edl/json_io.hpp"

#include <exception>
#include <filesystem>
#include <string>
#include <vector>

namespace edl {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_config = 2, exit_nonconvergence = 3 };

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e) noexcept;

/// SHA-256 of the canonical config text with the output directory left out.
std::string config_hash(const ExperimentConfig& cfg);

/// Assembles and solves the configured problem.
SolveResult solve_experiment(const ExperimentConfig& cfg);

/// Each command writes into `out` (created if needed), updates out/manifest.json and
/// returns the exit code. Configuration and numerical failures are thrown; the CLI maps
/// them through exit_code_for.
///
/// solve:  solution.csv, convergence.csv
/// verify: verify.json, verify.csv, curves.csv (reuses solution.csv when its config hash matches)
/// decay:  decay.json, decay_profile.csv, lorentz_profile.csv
/// report: report.json, summary.txt (needs verify.json and decay.json)
/// sweep:  one subdirectory per point of the cross product with all of the above, plus sweep.json
int cmd_solve(const ExperimentConfig& cfg, const std::filesystem::path& out);
int cmd_verify(const ExperimentConfig& cfg, const std::filesystem::path& out, bool force = false);
int cmd_decay(const ExperimentConfig& cfg, const std::filesystem::path& out);
int cmd_report(const std::filesystem::path& dir);
int cmd_sweep(const ExperimentConfig& cfg, const std::filesystem::path& out, std::size_t jobs = 1, bool force = false);

/// Configs of the sweep cross product, in row-major order of the [sweep] axes, with their
/// subdirectory names. "grid.scale" is accepted as an axis and applies apply_grid_scale.
struct SweepPoint {
    std::string name;
    std::vector<std::pair<std::string, std::string>> overrides;
    ExperimentConfig config;
};
std::vector<SweepPoint> expand_sweep(const ExperimentConfig& cfg);

}  // namespace edl
