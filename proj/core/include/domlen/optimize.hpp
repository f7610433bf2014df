#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "domlen/inverse.hpp"

namespace domlen {

enum class OptimizerMethod { FDGradientDescent, GoldenSection };

struct OptimizerConfig {
  double lower = 0.0;
  double upper = 1.0;
  double start = 0.5;
  OptimizerMethod method = OptimizerMethod::FDGradientDescent;
  double tol_step = 1e-6;
  double tol_cost = 1e-14;
  int max_iters = 100;
  double fd_step = 1e-4;

  /// Throws std::invalid_argument unless lower < start < upper and fd_step > 0.
  void validate() const;
};

enum class StopReason {
  StepTolerance,
  CostTolerance,
  BracketTolerance,
  MaxIterations,
  LineSearchFailure,
  SolverFailure,
  Error,
};

std::string_view to_string(StopReason reason);

struct Iterate {
  double length;
  double cost;
};

struct OptResult {
  double length = 0.0;  // reconstructed length L_c
  double final_cost = 0.0;
  std::vector<Iterate> iterates;
  int evaluations = 0;
  bool converged = false;
  StopReason reason = StopReason::MaxIterations;
  std::string diagnostic;
};

using Objective = std::function<double(double)>;

/// Bounded minimization of a scalar objective.
///
/// FDGradientDescent takes central differences with step h for the slope and
/// curvature, proposes the curvature-scaled (Newton) step when the curvature
/// is positive and a quarter of the bracket downhill otherwise, and accepts
/// the projection onto [lower + h, upper - h] under an Armijo condition
/// (c = 1e-4, halving). GoldenSection shrinks [lower, upper] until it is
/// narrower than tol_step. Non-convergence is reported in the result, never
/// thrown.
OptResult minimize_scalar(const Objective& objective, const OptimizerConfig& cfg);

OptResult minimize(const CostSpec& spec, const OptimizerConfig& cfg);

/// Independent runs from each start, executed concurrently; results follow the
/// order of `starts`. A failing run yields converged = false with reason Error.
std::vector<OptResult> multi_start(const CostSpec& spec, const std::vector<double>& starts,
                                   const OptimizerConfig& cfg);

}  // namespace domlen
