#include "domlen/inverse.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "domlen/error.hpp"
#include "domlen/trace_ops.hpp"

namespace domlen {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BoundaryTrace masked_density(const Trajectory& rho, const BoundaryTrace& ubar) {
  std::vector<double> values(ubar.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] = ubar[j] <= 0.0 ? rho.at(static_cast<int>(j), 0) : 0.0;
  }
  return BoundaryTrace(ubar.grid(), std::move(values));
}

BoundaryTrace perturb(const BoundaryTrace& trace, double scale, std::mt19937_64& engine) {
  std::vector<double> values(trace.values().begin(), trace.values().end());
  for (double& v : values) {
    // 53 random bits mapped onto [-1, 1).
    const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    v *= 1.0 + scale * (2.0 * unit - 1.0);
  }
  return BoundaryTrace(trace.grid(), std::move(values));
}

bool uses_alpha(Functional f) { return f == Functional::J2; }
bool uses_gamma(Functional f) { return f == Functional::Jvd; }

void check_pairing(const SystemTemplate& system, Functional f) {
  const bool ok = std::visit(
      overloaded{
          [&](const BurgersTemplate&) { return f == Functional::J1; },
          [&](const BurgersHeatTemplate&) { return f == Functional::J2 || f == Functional::J3; },
          [&](const VariableDensityTemplate&) { return f == Functional::Jvd; },
      },
      system);
  if (!ok) throw std::invalid_argument("cost functional does not match the system");
}

}  // namespace

BurgersProblem BurgersTemplate::instantiate(double length, const SolverParams& params) const {
  const SpatialGrid space(length, params.cells);
  const TimeGrid time(horizon, params.steps);
  return BurgersProblem{
      .eta = sample_time(eta, time), .u0 = sample_space(u0, space), .linear = linear};
}

BurgersHeatProblem BurgersHeatTemplate::instantiate(double length,
                                                    const SolverParams& params) const {
  const SpatialGrid space(length, params.cells);
  const TimeGrid time(horizon, params.steps);
  return make_burgers_heat_problem(coupling, variant, sample_time(eta, time),
                                   sample_time(theta_boundary, time), sample_space(u0, space),
                                   sample_space(theta0, space), linear);
}

VariableDensityProblem VariableDensityTemplate::instantiate(double length,
                                                            const SolverParams& params) const {
  const SpatialGrid space(length, params.cells);
  const TimeGrid time(horizon, params.steps);
  return VariableDensityProblem{.ubar = sample_time(ubar, time),
                                .rhobar = sample_time(rhobar, time),
                                .u0 = sample_space(u0, space),
                                .rho0 = sample_space(rho0, space)};
}

double horizon_of(const SystemTemplate& system) {
  return std::visit([](const auto& s) { return s.horizon; }, system);
}

Functional default_functional(const SystemTemplate& system) {
  return std::visit(overloaded{
                        [](const BurgersTemplate&) { return Functional::J1; },
                        [](const BurgersHeatTemplate& s) {
                          return s.variant == HeatBoundary::DirichletDirichlet ? Functional::J2
                                                                               : Functional::J3;
                        },
                        [](const VariableDensityTemplate&) { return Functional::Jvd; },
                    },
                    system);
}

ObservationSet observe(const SystemTemplate& system, double length, const SolverParams& params) {
  return std::visit(
      overloaded{
          [&](const BurgersTemplate& s) {
            const auto u = solve_burgers(s.instantiate(length, params), params);
            return ObservationSet{.beta = boundary_flux(u)};
          },
          [&](const BurgersHeatTemplate& s) {
            const auto sol = solve_burgers_heat(s.instantiate(length, params), params);
            return ObservationSet{.beta = boundary_flux(sol.u),
                                  .alpha = boundary_flux(sol.second),
                                  .zeta = boundary_value(sol.second)};
          },
          [&](const VariableDensityTemplate& s) {
            const auto problem = s.instantiate(length, params);
            const auto sol = solve_variable_density(problem, params);
            return ObservationSet{.beta = boundary_flux(sol.u),
                                  .gamma = masked_density(sol.second, problem.ubar)};
          },
      },
      system);
}

ObservationSet make_target(const SystemTemplate& system, Functional functional,
                           double target_length, const SolverParams& params,
                           const NoiseSpec& noise) {
  check_pairing(system, functional);
  ObservationSet obs = observe(system, target_length, params);
  if (!uses_alpha(functional)) obs.alpha.reset();
  if (functional != Functional::J3) obs.zeta.reset();
  if (!uses_gamma(functional)) obs.gamma.reset();
  return add_noise(obs, noise);
}

ObservationSet add_noise(const ObservationSet& obs, const NoiseSpec& noise) {
  if (noise.percent < 0.0) throw std::invalid_argument("add_noise: percent must be nonnegative");
  if (noise.percent == 0.0) return obs;
  std::mt19937_64 engine(noise.seed);
  const double scale = noise.percent / 100.0;
  ObservationSet out{.beta = perturb(obs.beta, scale, engine)};
  if (obs.alpha) out.alpha = perturb(*obs.alpha, scale, engine);
  if (obs.zeta) out.zeta = perturb(*obs.zeta, scale, engine);
  if (obs.gamma) out.gamma = perturb(*obs.gamma, scale, engine);
  return out;
}

CostEvaluation evaluate_cost_detailed(const CostSpec& spec, double length) {
  check_pairing(spec.system, spec.functional);
  if (!(length > 0.0)) throw std::invalid_argument("evaluate_cost: length must be positive");
  if (!(spec.target.grid() == TimeGrid(horizon_of(spec.system), spec.params.steps))) {
    throw std::invalid_argument("evaluate_cost: target is not sampled on the solver time grid");
  }
  std::optional<ObservationSet> model;
  try {
    model = observe(spec.system, length, spec.params);
  } catch (const SolverError& e) {
    return {std::numeric_limits<double>::infinity(), e.what()};
  } catch (const std::domain_error& e) {
    return {std::numeric_limits<double>::infinity(), e.what()};
  }

  double sum = l2_time_misfit(spec.target.beta, model->beta);
  if (uses_alpha(spec.functional)) {
    if (!spec.target.alpha) throw std::invalid_argument("evaluate_cost: J2 target lacks alpha");
    sum += l2_time_misfit(*spec.target.alpha, *model->alpha);
  }
  if (uses_gamma(spec.functional)) {
    if (!spec.target.gamma) throw std::invalid_argument("evaluate_cost: Jvd target lacks gamma");
    sum += l2_time_misfit(*spec.target.gamma, *model->gamma);
  }
  return {0.5 * sum, {}};
}

double evaluate_cost(const CostSpec& spec, double length) {
  return evaluate_cost_detailed(spec, length).value;
}

std::vector<ScanPoint> scan_cost(const CostSpec& spec, double from, double to, double step) {
  if (!(step > 0.0) || !(to >= from)) throw std::invalid_argument("scan_cost: bad range");
  const int count = static_cast<int>(std::floor((to - from) / step + 0.5)) + 1;
  std::vector<ScanPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double length = from + i * step;
    out.push_back({length, evaluate_cost(spec, length)});
  }
  return out;
}

int count_basins(const std::vector<ScanPoint>& scan, double threshold) {
  int basins = 0;
  bool inside = false;
  for (const auto& p : scan) {
    const bool below = p.cost < threshold;
    if (below && !inside) ++basins;
    inside = below;
  }
  return basins;
}

}  // namespace domlen
