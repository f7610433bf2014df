#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domlen/expression.hpp"
#include "domlen/forward.hpp"
#include "domlen/inverse.hpp"
#include "domlen/optimize.hpp"

namespace domlen {

enum class SystemKind { Burgers, BurgersHeatDD, BurgersHeatDN, VariableDensity };
enum class RunMode { Forward, Invert, Multistart, Table, OracleCheck, Scan };

std::string_view to_string(SystemKind kind);
std::string_view to_string(RunMode mode);

struct ConfigIssue {
  int line;  // 0 when the issue is not tied to a single line
  std::string message;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

/// One experiment, as read from a `key = value` file.
struct ExperimentConfig {
  std::string name;
  SystemKind system = SystemKind::Burgers;
  RunMode mode = RunMode::Forward;

  // Data. eta doubles as ubar for the variable-density system; theta_boundary
  // is lambda (Dirichlet) or chi (Neumann).
  Expression eta = Expression::parse("0");
  Expression theta_boundary = Expression::parse("0");
  Expression rhobar = Expression::parse("1");
  Expression u0 = Expression::parse("0");
  Expression theta0 = Expression::parse("0");
  Expression rho0 = Expression::parse("1");

  double horizon = 1.0;
  double coupling = 1.0;
  bool linear = false;

  double target_length = 1.0;
  double lower = 0.0;
  double upper = 0.0;
  double start = 0.0;
  std::vector<double> starts;

  int cells = 200;
  int steps = 1000;
  bool cfl_guard = true;
  double courant_limit = 25.0;

  double noise = 0.0;
  std::uint64_t seed = 0;

  OptimizerMethod method = OptimizerMethod::FDGradientDescent;
  double tol_step = 1e-6;
  double tol_cost = 1e-14;
  int max_iters = 100;
  double fd_step = 1e-4;

  std::optional<double> scan_from;
  std::optional<double> scan_to;
  double scan_step = 0.05;

  std::string table_name = "table";

  // Refinement study against the closed-form Burgers solution.
  double oracle_length = 4.0;
  int oracle_mode = 2;
  double oracle_offset = 2.0;
  double oracle_horizon = 1.0;
  double oracle_dt_factor = 1.0;  // dt = factor * dx^2
  std::vector<int> oracle_cells{100, 200, 400};

  std::string out_dir;

  SolverParams solver_params() const;
  OptimizerConfig optimizer_config() const;
  SystemTemplate system_template() const;
};

/// Parses and validates a configuration. All problems are collected and
/// reported together through ConfigError.
ExperimentConfig parse_config(std::string_view text);

/// Re-parse-able text form; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const ExperimentConfig& cfg);

}  // namespace domlen
