#include "domlen/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <limits>
#include <stdexcept>

namespace domlen {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 40;

class CountingObjective {
 public:
  explicit CountingObjective(const Objective& f) : f_(f) {}
  double operator()(double x) {
    ++count_;
    return f_(x);
  }
  int count() const { return count_; }

 private:
  const Objective& f_;
  int count_ = 0;
};

OptResult gradient_descent(const Objective& objective, const OptimizerConfig& cfg) {
  CountingObjective f(objective);
  const double h = cfg.fd_step;
  const double lo = cfg.lower + h;
  const double hi = cfg.upper - h;
  const double max_step = 0.25 * (cfg.upper - cfg.lower);
  auto project = [&](double x) { return std::clamp(x, lo, hi); };

  OptResult result;
  double x = project(cfg.start);
  double fx = f(x);
  result.iterates.push_back({x, fx});
  if (!std::isfinite(fx)) {
    result.reason = StopReason::SolverFailure;
    result.diagnostic = "objective is not finite at the start point";
  }

  for (int iter = 0; iter < cfg.max_iters && std::isfinite(fx); ++iter) {
    if (fx < cfg.tol_cost) {
      result.converged = true;
      result.reason = StopReason::CostTolerance;
      break;
    }
    const double fp = f(x + h);
    const double fm = f(x - h);
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      result.reason = StopReason::SolverFailure;
      result.diagnostic = "objective is not finite next to the current iterate";
      break;
    }
    const double slope = (fp - fm) / (2.0 * h);
    const double curvature = (fp - 2.0 * fx + fm) / (h * h);
    if (slope == 0.0) {
      result.converged = true;
      result.reason = StopReason::StepTolerance;
      break;
    }
    double direction = curvature > 0.0 ? -slope / curvature : -std::copysign(max_step, slope);
    direction = std::clamp(direction, -max_step, max_step);

    bool accepted = false;
    bool stalled = false;
    double x_new = x;
    double f_new = fx;
    double alpha = 1.0;
    for (int k = 0; k < kMaxHalvings; ++k, alpha *= 0.5) {
      x_new = project(x + alpha * direction);
      if (std::abs(x_new - x) < cfg.tol_step) {
        stalled = true;
        break;
      }
      f_new = f(x_new);
      if (std::isfinite(f_new) && f_new <= fx + kArmijo * slope * (x_new - x)) {
        accepted = true;
        break;
      }
    }

    if (!accepted) {
      result.converged = stalled;
      result.reason = stalled ? StopReason::StepTolerance : StopReason::LineSearchFailure;
      break;
    }
    const double step = x_new - x;
    x = x_new;
    fx = f_new;
    result.iterates.push_back({x, fx});
    if (std::abs(step) < cfg.tol_step) {
      result.converged = true;
      result.reason = StopReason::StepTolerance;
      break;
    }
  }

  result.length = x;
  result.final_cost = fx;
  result.evaluations = f.count();
  return result;
}

OptResult golden_section(const Objective& objective, const OptimizerConfig& cfg) {
  CountingObjective f(objective);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = cfg.lower;
  double b = cfg.upper;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);

  OptResult result;
  auto record = [&] {
    const bool left = fc <= fd || !std::isfinite(fd);
    result.iterates.push_back(left ? Iterate{c, fc} : Iterate{d, fd});
  };
  record();

  result.reason = StopReason::MaxIterations;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    if (b - a < cfg.tol_step) {
      result.converged = true;
      result.reason = StopReason::BracketTolerance;
      break;
    }
    // Non-finite values compare as worse than anything finite.
    const bool keep_left = !std::isfinite(fd) || (std::isfinite(fc) && fc <= fd);
    if (keep_left) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    record();
  }
  if (!result.converged && b - a < cfg.tol_step) {
    result.converged = true;
    result.reason = StopReason::BracketTolerance;
  }

  const Iterate best = result.iterates.back();
  result.length = best.length;
  result.final_cost = best.cost;
  if (!std::isfinite(best.cost)) {
    result.converged = false;
    result.reason = StopReason::SolverFailure;
    result.diagnostic = "objective is not finite anywhere in the final bracket";
  }
  result.evaluations = f.count();
  return result;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(lower < start && start < upper)) {
    throw std::invalid_argument("optimizer: need lower < start < upper");
  }
  if (!(fd_step > 0.0)) throw std::invalid_argument("optimizer: fd_step must be positive");
  if (!(2.0 * fd_step < upper - lower)) {
    throw std::invalid_argument("optimizer: fd_step is too large for the bounds");
  }
  if (!(tol_step > 0.0)) throw std::invalid_argument("optimizer: tol_step must be positive");
  if (max_iters < 1) throw std::invalid_argument("optimizer: max_iters must be positive");
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::StepTolerance: return "step_tolerance";
    case StopReason::CostTolerance: return "cost_tolerance";
    case StopReason::BracketTolerance: return "bracket_tolerance";
    case StopReason::MaxIterations: return "max_iterations";
    case StopReason::LineSearchFailure: return "line_search_failure";
    case StopReason::SolverFailure: return "solver_failure";
    case StopReason::Error: return "error";
  }
  return "unknown";
}

OptResult minimize_scalar(const Objective& objective, const OptimizerConfig& cfg) {
  cfg.validate();
  return cfg.method == OptimizerMethod::GoldenSection ? golden_section(objective, cfg)
                                                      : gradient_descent(objective, cfg);
}

OptResult minimize(const CostSpec& spec, const OptimizerConfig& cfg) {
  return minimize_scalar([&spec](double length) { return evaluate_cost(spec, length); }, cfg);
}

std::vector<OptResult> multi_start(const CostSpec& spec, const std::vector<double>& starts,
                                   const OptimizerConfig& cfg) {
  std::vector<std::future<OptResult>> runs;
  runs.reserve(starts.size());
  for (double start : starts) {
    OptimizerConfig local = cfg;
    local.start = start;
    runs.push_back(std::async(std::launch::async, [&spec, local] { return minimize(spec, local); }));
  }
  std::vector<OptResult> results;
  results.reserve(starts.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    try {
      results.push_back(runs[i].get());
    } catch (const std::exception& e) {
      OptResult failed;
      failed.length = std::clamp(starts[i], cfg.lower, cfg.upper);
      failed.final_cost = std::numeric_limits<double>::infinity();
      failed.iterates.push_back({failed.length, failed.final_cost});
      failed.reason = StopReason::Error;
      failed.diagnostic = e.what();
      results.push_back(std::move(failed));
    }
  }
  return results;
}

}  // namespace domlen
