#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "domlen/forward.hpp"
#include "domlen/grid.hpp"

namespace domlen {

// Problem templates hold every datum except the interval length, as functions
// so they can be resampled on the grid of each candidate length.

struct BurgersTemplate {
  double horizon = 1.0;
  TimeFunction eta;
  SpaceFunction u0;
  bool linear = false;

  BurgersProblem instantiate(double length, const SolverParams& params) const;
};

struct BurgersHeatTemplate {
  double horizon = 1.0;
  double coupling = 1.0;
  HeatBoundary variant = HeatBoundary::DirichletDirichlet;
  TimeFunction eta;
  TimeFunction theta_boundary;
  SpaceFunction u0;
  SpaceFunction theta0;
  bool linear = false;

  BurgersHeatProblem instantiate(double length, const SolverParams& params) const;
};

struct VariableDensityTemplate {
  double horizon = 1.0;
  TimeFunction ubar;
  TimeFunction rhobar;
  SpaceFunction u0;
  SpaceFunction rho0;

  VariableDensityProblem instantiate(double length, const SolverParams& params) const;
};

using SystemTemplate = std::variant<BurgersTemplate, BurgersHeatTemplate, VariableDensityTemplate>;

double horizon_of(const SystemTemplate& system);

/// Boundary observations at x = 0: flux of u (beta), flux of theta (alpha),
/// value of theta (zeta) and the density masked to outflow instants (gamma).
struct ObservationSet {
  BoundaryTrace beta;
  std::optional<BoundaryTrace> alpha{};
  std::optional<BoundaryTrace> zeta{};
  std::optional<BoundaryTrace> gamma{};

  const TimeGrid& grid() const { return beta.grid(); }
};

/// Multiplicative uniform noise: v -> v (1 + percent/100 * xi), xi ~ U[-1, 1].
struct NoiseSpec {
  double percent = 0.0;
  std::uint64_t seed = 0;
};

enum class Functional {
  J1,   // beta misfit, Burgers
  J2,   // beta + alpha misfits, Burgers-heat
  J3,   // beta misfit, Burgers-heat
  Jvd,  // beta + gamma misfits, variable density
};

/// The functional that matches a system by default: J1 for Burgers, J2 for
/// the Dirichlet heat variant, J3 for the Neumann variant, Jvd for variable density.
Functional default_functional(const SystemTemplate& system);

struct CostSpec {
  Functional functional;
  SystemTemplate system;
  ObservationSet target;
  SolverParams params;
};

/// Forward-solves at `length` and extracts every observation the system offers.
ObservationSet observe(const SystemTemplate& system, double length, const SolverParams& params);

/// Synthetic target: the traces `functional` needs, computed at `target_length`
/// with the same discretization used for reconstruction, then perturbed.
ObservationSet make_target(const SystemTemplate& system, Functional functional,
                           double target_length, const SolverParams& params,
                           const NoiseSpec& noise);

ObservationSet add_noise(const ObservationSet& obs, const NoiseSpec& noise);

struct CostEvaluation {
  double value;
  std::string diagnostic;  // non-empty when the forward solve failed (value is +inf)
};

CostEvaluation evaluate_cost_detailed(const CostSpec& spec, double length);

/// 1/2 of the summed squared L2(0,T) misfits of the traces in the functional;
/// +inf when the forward solver fails.
double evaluate_cost(const CostSpec& spec, double length);

struct ScanPoint {
  double length;
  double cost;
};

/// Cost on from, from+step, ... up to and including `to` (within step/2).
std::vector<ScanPoint> scan_cost(const CostSpec& spec, double from, double to, double step);

/// Number of maximal runs of consecutive scan points with cost below `threshold`.
int count_basins(const std::vector<ScanPoint>& scan, double threshold);

}  // namespace domlen
