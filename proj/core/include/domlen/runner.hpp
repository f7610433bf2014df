#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "domlen/analytic.hpp"
#include "domlen/config.hpp"
#include "domlen/optimize.hpp"

namespace domlen {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kConfigError = 1;
inline constexpr int kSolverFailure = 2;
inline constexpr int kNonConvergence = 3;
}  // namespace exit_code

struct RunReport {
  ExperimentConfig config;
  std::vector<OptResult> results;
  std::vector<std::string> notes;  // warnings and one-line summaries
  double wall_seconds = 0.0;
  std::vector<std::filesystem::path> manifest;
  int exit_code = exit_code::kSuccess;
};

/// Dispatches on cfg.mode, writes the mode's CSV files into `out_dir`
/// (created if needed) and lists them in the manifest. Throws SolverError
/// when a forward solve outside the optimizer fails.
RunReport run(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

struct ConvergenceRow {
  int cells;
  int steps;
  double dx;
  double dt;
  double linf_error;
  std::optional<double> order;  // against the previous (coarser) row
};

/// Max-norm error of solve_burgers against the closed-form solution over the
/// whole space-time grid, for each cell count, with dt = dt_factor * dx^2.
std::vector<ConvergenceRow> oracle_convergence_study(const ColeHopfSolution& exact, double horizon,
                                                     const std::vector<int>& cells,
                                                     double dt_factor);

/// Cost functional of the configured system against its synthetic target
/// (generated at cfg.target_length with the given noise).
CostSpec make_cost_spec(const ExperimentConfig& cfg, const NoiseSpec& noise);

struct TableRow {
  double noise_percent;
  std::uint64_t seed;
  OptResult result;
};

inline const std::vector<double> kTableNoiseLevels{1.0, 0.1, 0.01, 0.001, 0.0};

/// Reconstruction at each noise level of kTableNoiseLevels; row i uses seed cfg.seed + i.
std::vector<TableRow> reproduce_table(const ExperimentConfig& cfg);

/// Directory holding the shipped case files (overridable with DOMLEN_CONFIG_DIR).
std::filesystem::path shipped_config_dir();

/// Names of the shipped cases, sorted.
std::vector<std::string> shipped_cases();

/// Reads `name_or_path` as a file, falling back to a shipped case of that name.
std::string load_config_text(const std::string& name_or_path);

}  // namespace domlen
