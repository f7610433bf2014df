#pragma once

#include <optional>
#include <string>
#include <utility>

#include "domlen/grid.hpp"

namespace domlen {

/// Discretization controls shared by every forward solver.
struct SolverParams {
  int cells = 200;
  int steps = 1000;
  bool cfl_guard = true;
  /// Largest dt*max|u|/dx accepted by the linearly implicit schemes when the
  /// guard is on. The explicit upwind density sweep always uses 1.
  double implicit_courant_limit = 25.0;
};

/// u_t - nu u_xx + u u_x = 0 on (0, length), u(0,t) = eta, u(length,t) = 0.
/// `linear` drops the advection term. `viscosity` is 1 for the physical
/// problem; other values serve rescaled reference solutions.
struct BurgersProblem {
  BoundaryTrace eta;
  SpatialProfile u0;
  bool linear = false;
  double viscosity = 1.0;

  double length() const { return u0.grid().length(); }
  double horizon() const { return eta.grid().horizon(); }
};

enum class HeatBoundary {
  DirichletDirichlet,  // theta(0) = lambda(t), theta(length) = 0
  DirichletNeumann,    // theta_x(0) = chi(t), theta_x(length) = 0
};

/// Burgers equation with source k*theta coupled to an advected heat equation.
struct BurgersHeatProblem {
  double coupling = 1.0;
  HeatBoundary variant = HeatBoundary::DirichletDirichlet;
  BoundaryTrace eta;
  BoundaryTrace theta_boundary;  // lambda or chi depending on variant
  SpatialProfile u0;
  SpatialProfile theta0;
  bool linear = false;
  bool dissipation_source = false;  // adds u_x^2 to the heat equation

  double length() const { return u0.grid().length(); }
  double horizon() const { return eta.grid().horizon(); }
};

/// Builds a coupled problem with the source term implied by the boundary variant:
/// the Neumann variant carries the u_x^2 dissipation source unless linear.
BurgersHeatProblem make_burgers_heat_problem(double coupling, HeatBoundary variant,
                                             BoundaryTrace eta, BoundaryTrace theta_boundary,
                                             SpatialProfile u0, SpatialProfile theta0,
                                             bool linear = false);

/// rho (u_t + u u_x) - u_xx = 0, rho_t + u rho_x = 0, with the density
/// prescribed at x = 0 only while ubar(t) > 0.
struct VariableDensityProblem {
  BoundaryTrace ubar;
  BoundaryTrace rhobar;
  SpatialProfile u0;
  SpatialProfile rho0;

  double length() const { return u0.grid().length(); }
  double horizon() const { return ubar.grid().horizon(); }
};

struct CoupledTrajectory {
  Trajectory u;
  Trajectory second;  // theta or rho
};

Trajectory solve_burgers(const BurgersProblem& p, const SolverParams& params);

CoupledTrajectory solve_burgers_heat(const BurgersHeatProblem& p, const SolverParams& params);

CoupledTrajectory solve_variable_density(const VariableDensityProblem& p,
                                         const SolverParams& params);

/// Describes a mismatch between initial and boundary data at the corners
/// (|u0(0) - eta(0)| or |u0(length)| above 1e-8); empty when compatible.
/// Mismatches are allowed by the solvers.
std::optional<std::string> compatibility_warning(const BurgersProblem& p);
std::optional<std::string> compatibility_warning(const BurgersHeatProblem& p);
std::optional<std::string> compatibility_warning(const VariableDensityProblem& p);

}  // namespace domlen
