#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "domlen/forward.hpp"
#include "domlen/inverse.hpp"
#include "domlen/tridiag.hpp"

namespace {

using namespace domlen;

void BM_TridiagSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> lower(n - 1, -1.0), upper(n - 1, -1.0), diag(n, 4.0), rhs(n, 1.0);
  for (auto _ : state) {
    auto x = tridiag_solve(lower, diag, upper, rhs);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_TridiagSolve)->Arg(201)->Arg(1601);

BurgersTemplate case1_1() {
  BurgersTemplate b;
  b.horizon = 5.0;
  b.eta = [](double t) { return 5 * std::pow(std::sin(t), 3); };
  b.u0 = [](double) { return 0.0; };
  return b;
}

void BM_SolveBurgers(benchmark::State& state) {
  SolverParams params;
  params.cells = static_cast<int>(state.range(0));
  params.steps = static_cast<int>(state.range(1));
  const auto problem = case1_1().instantiate(2.0, params);
  for (auto _ : state) {
    auto tr = solve_burgers(problem, params);
    benchmark::DoNotOptimize(tr.at(params.steps, 1));
  }
}
BENCHMARK(BM_SolveBurgers)->Args({200, 1000})->Args({400, 4000})->Unit(benchmark::kMillisecond);

void BM_EvaluateCost(benchmark::State& state) {
  SolverParams params;
  const auto target = make_target(case1_1(), Functional::J1, 2.0, params, {});
  const CostSpec spec{Functional::J1, case1_1(), target, params};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_cost(spec, 2.5));
}
BENCHMARK(BM_EvaluateCost)->Unit(benchmark::kMillisecond);

void BM_SolveBurgersHeat(benchmark::State& state) {
  SolverParams params;
  BurgersHeatTemplate t;
  t.horizon = 5.0;
  t.eta = [](double s) { return 5 * std::pow(std::sin(s), 3); };
  t.theta_boundary = [](double s) { return 0.2 * std::cos(s) * std::sin(s); };
  t.u0 = t.theta0 = [](double) { return 0.0; };
  const auto problem = t.instantiate(2.0, params);
  for (auto _ : state) {
    auto r = solve_burgers_heat(problem, params);
    benchmark::DoNotOptimize(r.u.at(params.steps, 1));
  }
}
BENCHMARK(BM_SolveBurgersHeat)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
