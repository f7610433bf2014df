#include "domlen/forward.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "domlen/error.hpp"
#include "domlen/tridiag.hpp"

namespace domlen {

namespace {

constexpr double kCompatibilityTolerance = 1e-8;
constexpr double kDensityBoundSlack = 1e-6;

struct EdgeCondition {
  enum class Type { Value, Flux };
  Type type;
  double value;

  static EdgeCondition fixed(double v) { return {Type::Value, v}; }
  static EdgeCondition flux(double g) { return {Type::Flux, g}; }
};

// One linearly implicit step of
//   mass (w_t + velocity w_x) - viscosity w_xx = source
// with Crank-Nicolson diffusion, advection frozen at the previous level and
// applied implicitly, and the source taken explicitly. Empty spans mean
// unit mass, no advection and no source respectively.
struct StepOperator {
  double dt;
  double dx;
  double viscosity = 1.0;
  std::span<const double> mass{};
  std::span<const double> velocity{};
  std::span<const double> source{};
};

void advance(const StepOperator& op, std::span<const double> prev, EdgeCondition left,
             EdgeCondition right, std::span<double> next) {
  const std::size_t n = prev.size() - 1;  // cells
  const double half = 0.5 * op.viscosity * op.dt / (op.dx * op.dx);
  const double adv_scale = op.dt / (2.0 * op.dx);

  std::vector<double> lower(n), diag(n + 1), upper(n), rhs(n + 1);
  for (std::size_t i = 1; i < n; ++i) {
    const double a = op.mass.empty() ? 1.0 : op.mass[i];
    const double adv = op.velocity.empty() ? 0.0 : a * adv_scale * op.velocity[i];
    lower[i - 1] = -half - adv;
    diag[i] = a + 2.0 * half;
    upper[i] = -half + adv;
    rhs[i] = a * prev[i] + half * (prev[i + 1] - 2.0 * prev[i] + prev[i - 1]);
    if (!op.source.empty()) rhs[i] += op.dt * op.source[i];
  }

  if (left.type == EdgeCondition::Type::Value) {
    diag[0] = 1.0;
    upper[0] = 0.0;
    rhs[0] = left.value;
  } else {
    // (-3 w0 + 4 w1 - w2) / (2dx) = g, with w2 eliminated through row 1.
    const double l1 = lower[0], d1 = diag[1], u1 = upper[1];
    diag[0] = l1 - 3.0 * u1;
    upper[0] = d1 + 4.0 * u1;
    rhs[0] = rhs[1] + 2.0 * op.dx * left.value * u1;
  }

  if (right.type == EdgeCondition::Type::Value) {
    diag[n] = 1.0;
    lower[n - 1] = 0.0;
    rhs[n] = right.value;
  } else {
    // (3 wN - 4 wN-1 + wN-2) / (2dx) = g, with wN-2 eliminated through row N-1.
    const double l = lower[n - 2], d = diag[n - 1], u = upper[n - 1];
    lower[n - 1] = -4.0 * l - d;
    diag[n] = 3.0 * l - u;
    rhs[n] = 2.0 * op.dx * right.value * l - rhs[n - 1];
  }

  const auto solution = tridiag_solve(lower, diag, upper, rhs);
  std::copy(solution.begin(), solution.end(), next.begin());
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void check_courant(std::span<const double> velocity, double dt, double dx, double limit,
                   const char* solver, double t) {
  const double courant = dt * max_abs(velocity) / dx;
  if (courant > limit) {
    std::ostringstream msg;
    msg << solver << ": Courant number " << courant << " exceeds " << limit << " at t = " << t
        << "; increase the step count";
    throw SolverError(SolverError::Kind::CourantViolation, msg.str());
  }
}

void check_finite(std::span<const double> state, const char* solver, double t) {
  for (double v : state) {
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << solver << ": non-finite state at t = " << t;
      throw SolverError(SolverError::Kind::BlowUp, msg.str());
    }
  }
}

void check_layout(const SpatialProfile& profile, const BoundaryTrace& trace,
                  const SolverParams& params, const char* solver) {
  if (params.cells < 3 || params.steps < 1) {
    throw std::invalid_argument(std::string(solver) + ": need at least 3 cells and 1 step");
  }
  if (profile.grid().cells() != params.cells) {
    throw std::invalid_argument(std::string(solver) +
                                ": initial profile is not sampled on the requested cell count");
  }
  if (trace.grid().steps() != params.steps) {
    throw std::invalid_argument(std::string(solver) +
                                ": boundary data is not sampled on the requested step count");
  }
}

// Squared first derivative: central in the interior, one-sided at the ends.
std::vector<double> squared_gradient(std::span<const double> u, double dx) {
  const std::size_t n = u.size() - 1;
  std::vector<double> out(n + 1);
  for (std::size_t i = 1; i < n; ++i) {
    const double g = (u[i + 1] - u[i - 1]) / (2.0 * dx);
    out[i] = g * g;
  }
  const double g0 = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dx);
  const double gn = (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / (2.0 * dx);
  out[0] = g0 * g0;
  out[n] = gn * gn;
  return out;
}

std::optional<std::string> corner_mismatch(const SpatialProfile& u0, double left_datum,
                                           const char* name) {
  std::ostringstream msg;
  bool mismatch = false;
  const double left_gap = std::abs(u0[0] - left_datum);
  const double right_gap = std::abs(u0[u0.size() - 1]);
  if (left_gap > kCompatibilityTolerance) {
    msg << name << "(0) differs from the boundary datum by " << left_gap;
    mismatch = true;
  }
  if (right_gap > kCompatibilityTolerance) {
    if (mismatch) msg << "; ";
    msg << name << "(length) = " << u0[u0.size() - 1] << " but the boundary value is 0";
    mismatch = true;
  }
  if (!mismatch) return std::nullopt;
  return msg.str();
}

}  // namespace

BurgersHeatProblem make_burgers_heat_problem(double coupling, HeatBoundary variant,
                                             BoundaryTrace eta, BoundaryTrace theta_boundary,
                                             SpatialProfile u0, SpatialProfile theta0,
                                             bool linear) {
  return BurgersHeatProblem{
      .coupling = coupling,
      .variant = variant,
      .eta = std::move(eta),
      .theta_boundary = std::move(theta_boundary),
      .u0 = std::move(u0),
      .theta0 = std::move(theta0),
      .linear = linear,
      .dissipation_source = variant == HeatBoundary::DirichletNeumann && !linear,
  };
}

Trajectory solve_burgers(const BurgersProblem& p, const SolverParams& params) {
  constexpr const char* kName = "solve_burgers";
  check_layout(p.u0, p.eta, params, kName);
  if (!(p.viscosity > 0.0)) throw std::invalid_argument("solve_burgers: viscosity must be positive");

  const SpatialGrid& space = p.u0.grid();
  const TimeGrid& time = p.eta.grid();
  Trajectory traj(space, time);
  std::ranges::copy(p.u0.values(), traj.row(0).begin());

  const StepOperator base{.dt = time.step(), .dx = space.spacing(), .viscosity = p.viscosity};
  for (int j = 0; j < time.steps(); ++j) {
    const auto prev = std::as_const(traj).row(j);
    StepOperator op = base;
    if (!p.linear) {
      if (params.cfl_guard) {
        check_courant(prev, op.dt, op.dx, params.implicit_courant_limit, kName, time.instant(j));
      }
      op.velocity = prev;
    }
    advance(op, prev, EdgeCondition::fixed(p.eta[static_cast<std::size_t>(j + 1)]),
            EdgeCondition::fixed(0.0), traj.row(j + 1));
    check_finite(std::as_const(traj).row(j + 1), kName, time.instant(j + 1));
  }
  return traj;
}

CoupledTrajectory solve_burgers_heat(const BurgersHeatProblem& p, const SolverParams& params) {
  constexpr const char* kName = "solve_burgers_heat";
  check_layout(p.u0, p.eta, params, kName);
  check_layout(p.theta0, p.theta_boundary, params, kName);
  if (!(p.u0.grid() == p.theta0.grid()) || !(p.eta.grid() == p.theta_boundary.grid())) {
    throw std::invalid_argument("solve_burgers_heat: fields sampled on different grids");
  }

  const SpatialGrid& space = p.u0.grid();
  const TimeGrid& time = p.eta.grid();
  const double dt = time.step();
  const double dx = space.spacing();
  Trajectory u(space, time);
  Trajectory theta(space, time);
  std::ranges::copy(p.u0.values(), u.row(0).begin());
  std::ranges::copy(p.theta0.values(), theta.row(0).begin());

  std::vector<double> heat_source;
  std::vector<double> momentum_source(static_cast<std::size_t>(space.nodes()));
  const bool neumann = p.variant == HeatBoundary::DirichletNeumann;

  for (int j = 0; j < time.steps(); ++j) {
    const auto u_prev = std::as_const(u).row(j);
    const auto theta_prev = std::as_const(theta).row(j);
    const double theta_datum = p.theta_boundary[static_cast<std::size_t>(j + 1)];

    if (!p.linear && params.cfl_guard) {
      check_courant(u_prev, dt, dx, params.implicit_courant_limit, kName, time.instant(j));
    }

    StepOperator heat{.dt = dt, .dx = dx};
    if (!p.linear) {
      heat.velocity = u_prev;
      if (p.dissipation_source) {
        heat_source = squared_gradient(u_prev, dx);
        heat.source = heat_source;
      }
    }
    advance(heat, theta_prev,
            neumann ? EdgeCondition::flux(theta_datum) : EdgeCondition::fixed(theta_datum),
            neumann ? EdgeCondition::flux(0.0) : EdgeCondition::fixed(0.0), theta.row(j + 1));
    check_finite(std::as_const(theta).row(j + 1), kName, time.instant(j + 1));

    const auto theta_next = std::as_const(theta).row(j + 1);
    for (std::size_t i = 0; i < momentum_source.size(); ++i) {
      momentum_source[i] = p.coupling * theta_next[i];
    }
    StepOperator momentum{.dt = dt, .dx = dx, .source = momentum_source};
    if (!p.linear) momentum.velocity = u_prev;
    advance(momentum, u_prev, EdgeCondition::fixed(p.eta[static_cast<std::size_t>(j + 1)]),
            EdgeCondition::fixed(0.0), u.row(j + 1));
    check_finite(std::as_const(u).row(j + 1), kName, time.instant(j + 1));
  }
  return {std::move(u), std::move(theta)};
}

CoupledTrajectory solve_variable_density(const VariableDensityProblem& p,
                                         const SolverParams& params) {
  constexpr const char* kName = "solve_variable_density";
  check_layout(p.u0, p.ubar, params, kName);
  check_layout(p.rho0, p.rhobar, params, kName);
  if (!(p.u0.grid() == p.rho0.grid()) || !(p.ubar.grid() == p.rhobar.grid())) {
    throw std::invalid_argument("solve_variable_density: fields sampled on different grids");
  }
  for (double r : p.rho0.values()) {
    if (!(r > 0.0)) throw std::invalid_argument("solve_variable_density: rho0 must be positive");
  }
  for (double r : p.rhobar.values()) {
    if (r < 0.0) throw std::invalid_argument("solve_variable_density: rhobar must be nonnegative");
  }

  const SpatialGrid& space = p.u0.grid();
  const TimeGrid& time = p.ubar.grid();
  const double dt = time.step();
  const double dx = space.spacing();
  const std::size_t n = static_cast<std::size_t>(space.cells());

  const auto [rho_min_0, rho_max_0] = std::ranges::minmax(p.rho0.values());
  const auto [rho_min_b, rho_max_b] = std::ranges::minmax(p.rhobar.values());
  const double rho_floor = std::min(rho_min_0, rho_min_b) * (1.0 - kDensityBoundSlack);
  const double rho_ceiling = std::max(rho_max_0, rho_max_b) * (1.0 + kDensityBoundSlack);

  Trajectory u(space, time);
  Trajectory rho(space, time);
  std::ranges::copy(p.u0.values(), u.row(0).begin());
  std::ranges::copy(p.rho0.values(), rho.row(0).begin());

  for (int j = 0; j < time.steps(); ++j) {
    const auto u_prev = std::as_const(u).row(j);
    const auto rho_prev = std::as_const(rho).row(j);
    if (params.cfl_guard) check_courant(u_prev, dt, dx, 1.0, kName, time.instant(j));

    // Explicit upwind transport of the density.
    auto rho_next = rho.row(j + 1);
    const double nu = dt / dx;
    for (std::size_t i = 1; i < n; ++i) {
      const double c = nu * u_prev[i];
      rho_next[i] = c > 0.0 ? rho_prev[i] - c * (rho_prev[i] - rho_prev[i - 1])
                            : rho_prev[i] - c * (rho_prev[i + 1] - rho_prev[i]);
    }
    // Inflow at x = 0 takes the prescribed density. Otherwise the edge node is
    // updated from inside the domain, which leaves it untouched at rest.
    const std::size_t jn = static_cast<std::size_t>(j + 1);
    const double out_left = nu * std::min(u_prev[0], 0.0);
    const double out_right = nu * std::max(u_prev[n], 0.0);
    rho_next[0] = p.ubar[jn] > 0.0 ? p.rhobar[jn]
                                   : rho_prev[0] - out_left * (rho_prev[1] - rho_prev[0]);
    rho_next[n] = rho_prev[n] - out_right * (rho_prev[n] - rho_prev[n - 1]);

    for (std::size_t i = 0; i <= n; ++i) {
      if (!std::isfinite(rho_next[i])) {
        throw SolverError(SolverError::Kind::BlowUp, "solve_variable_density: non-finite density");
      }
      if (rho_next[i] < rho_floor || rho_next[i] > rho_ceiling) {
        std::ostringstream msg;
        msg << kName << ": density " << rho_next[i] << " left [" << rho_floor << ", "
            << rho_ceiling << "] at t = " << time.instant(j + 1);
        throw SolverError(SolverError::Kind::MaximumPrinciple, msg.str());
      }
    }

    const StepOperator momentum{
        .dt = dt, .dx = dx, .mass = std::as_const(rho).row(j + 1), .velocity = u_prev};
    advance(momentum, u_prev, EdgeCondition::fixed(p.ubar[jn]), EdgeCondition::fixed(0.0),
            u.row(j + 1));
    check_finite(std::as_const(u).row(j + 1), kName, time.instant(j + 1));
  }
  return {std::move(u), std::move(rho)};
}

std::optional<std::string> compatibility_warning(const BurgersProblem& p) {
  return corner_mismatch(p.u0, p.eta[0], "u0");
}

std::optional<std::string> compatibility_warning(const BurgersHeatProblem& p) {
  auto u_warning = corner_mismatch(p.u0, p.eta[0], "u0");
  std::optional<std::string> theta_warning;
  if (p.variant == HeatBoundary::DirichletDirichlet) {
    theta_warning = corner_mismatch(p.theta0, p.theta_boundary[0], "theta0");
  }
  if (u_warning && theta_warning) return *u_warning + "; " + *theta_warning;
  return u_warning ? u_warning : theta_warning;
}

std::optional<std::string> compatibility_warning(const VariableDensityProblem& p) {
  return corner_mismatch(p.u0, p.ubar[0], "u0");
}

}  // namespace domlen
