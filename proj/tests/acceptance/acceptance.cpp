// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <string>
#include <vector>

#include "domlen/analytic.hpp"
#include "domlen/config.hpp"
#include "domlen/forward.hpp"
#include "domlen/inverse.hpp"
#include "domlen/optimize.hpp"
#include "domlen/runner.hpp"

namespace fs = std::filesystem;
using namespace domlen;

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, std::string what) {
    pass = pass && ok;
    details.push_back((ok ? "ok   " : "FAIL ") + std::move(what));
  }
};

ExperimentConfig load(const std::string& name) { return parse_config(load_config_text(name)); }

// The shipped config must describe the setup the criterion names.
void require_setup(Verdict& v, const ExperimentConfig& c, const std::string& eta,
                   const std::string& u0, double horizon, double start) {
  v.require(c.eta.source() == eta && c.u0.source() == u0 && c.horizon == horizon &&
                c.target_length == 2.0 && c.start == start && c.cells == 200 && c.steps == 1000 &&
                c.noise == 0.0,
            c.name + " setup: T=" + fmt("%g", c.horizon) + ", eta=" + c.eta.source() +
                ", u0=" + c.u0.source() + fmt(", start=%g", c.start));
}

OptResult invert(const ExperimentConfig& c, NoiseSpec noise = {}) {
  return minimize(make_cost_spec(c, noise), c.optimizer_config());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Verdict criterion1() {
  Verdict v;
  const auto c = load("case1_1");
  require_setup(v, c, "5*sin(t)^3", "0", 5.0, 3.0);
  v.require(c.lower == 1.2 && c.upper == 3.5, fmt("bounds (%g, %g)", c.lower, c.upper));
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = invert(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(std::abs(r.length - 2.0) <= 1e-3, fmt("L_c = %.9f, |L_c - 2| <= 1e-3", r.length));
  v.require(r.final_cost <= 1e-8, fmt("final cost %.3e <= 1e-8", r.final_cost));
  v.require(secs <= 30.0, fmt("runtime %.3f s <= 30 s", secs));
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto c = load("case1_1");
  for (double p : {1.0, 0.1, 0.01, 0.001}) {
    for (std::uint64_t seed : {101u, 202u, 303u}) {
      const auto r = invert(c, {p, seed});
      const double tol = 20 * p / 100 + 1e-3;
      v.require(std::abs(r.length - 2.0) <= tol,
                fmt("p=%g%% seed=%llu: L_c = %.9f, tol %.4g", p, static_cast<unsigned long long>(seed),
                    r.length, tol));
    }
  }
  return v;
}

Verdict criterion3() {
  Verdict v;
  const auto c = load("case1_2");
  require_setup(v, c, "5*sin(t)^3", "3*x*(2-x)", 5.0, 2.4);
  const auto r = invert(c);
  v.require(std::abs(r.length - 2.0) <= 1e-2, fmt("L_c = %.9f, |L_c - 2| <= 1e-2", r.length));
  return v;
}

Verdict criterion4() {
  Verdict v;
  const auto c = load("case1_3");
  v.require(c.target_length == 6.0 && c.horizon == 6.0 && c.eta.source() == "0" &&
                c.u0.source() == "pi*sin(pi*x/2)/(2+cos(pi*x/2))" &&
                c.starts == std::vector<double>{5.6, 4.6},
            "case1_3 setup: L_d=6, T=6, eta=0, starts {5.6, 4.6}");
  const auto spec = make_cost_spec(c, {});
  const auto rs = multi_start(spec, c.starts, c.optimizer_config());
  v.require(rs.size() == 2 && std::abs(rs[0].length - 6.0) <= 0.02,
            fmt("L1_c = %.9f within 0.02 of 6", rs[0].length));
  v.require(rs.size() == 2 && std::abs(rs[1].length - 4.0) <= 0.02,
            fmt("L2_c = %.9f within 0.02 of 4", rs[1].length));
  v.require(rs[0].final_cost <= 1e-6 && rs[1].final_cost <= 1e-6,
            fmt("costs %.3e, %.3e <= 1e-6", rs[0].final_cost, rs[1].final_cost));
  const auto scan = scan_cost(spec, 3.2, 6.8, 0.05);
  const int basins = count_basins(scan, 1e-6);
  v.require(basins == 2, fmt("scan over (3.2, 6.8) step 0.05: %d basin(s) below 1e-6", basins));
  return v;
}

Verdict criterion5() {
  Verdict v;
  const auto rows = oracle_convergence_study(ColeHopfSolution(4.0, 2, 2.0), 1.0, {100, 200, 400}, 1.0);
  for (const auto& r : rows) {
    std::string line = fmt("N=%d M=%d error %.3e", r.cells, r.steps, r.linf_error);
    if (r.order) line += fmt(" order %.3f", *r.order);
    v.require(!r.order || *r.order >= 1.8, line);
  }
  v.require(rows.back().linf_error <= 1e-4, fmt("error at N=400 %.3e <= 1e-4", rows.back().linf_error));
  return v;
}

Verdict criterion6() {
  Verdict v;
  struct Params {
    double L;
    int m0, n0, k1;
    double a;
  };
  for (const auto& p : {Params{6, 3, 2, 2, 2}, Params{2, 2, 1, 1, 2}}) {
    const auto pair = build_counterexample(p.L, p.m0, p.n0, p.k1, p.a);
    const auto s = pair.short_member(), l = pair.long_member();
    double flux_gap = 0.0, neumann_flux = 0.0;
    std::vector<NeumannHeatSolution> spectral;
    for (const auto& m : {s, l}) {
      const auto phi0 = sample_space(
          [&](double x) { return std::cos(m.mode() * kPi * x / m.length()) + m.offset(); },
          SpatialGrid(m.length(), 400));
      spectral.push_back(neumann_heat_solve(phi0, 8));
    }
    for (int j = 0; j < 1000; ++j) {
      const double t = 5.0 * j / 999;
      flux_gap = std::max(flux_gap, std::abs(cole_hopf_flux0(s, t) - cole_hopf_flux0(l, t)));
      for (const auto& n : spectral) neumann_flux = std::max(neumann_flux, std::abs(n.flux(0.0, t)));
    }
    const std::string tag = fmt("pair (L=%g, m0=%d, n0=%d, k1=%d, a=%g) -> l=%g, n1=%d", p.L, p.m0,
                                p.n0, p.k1, p.a, pair.short_length, pair.long_mode);
    v.require(flux_gap <= 1e-13, tag + fmt(": max flux gap %.2e <= 1e-13", flux_gap));
    v.require(neumann_flux <= 1e-10, tag + fmt(": max |phi_x(0,t)| %.2e <= 1e-10", neumann_flux));
  }
  return v;
}

Verdict criterion7() {
  Verdict v;
  const auto c21 = load("case2_1");
  v.require(c21.system == SystemKind::BurgersHeatDD && c21.coupling == 1.0 && c21.start == 1.0 &&
                c21.theta_boundary.source() == "0.2*cos(t)*sin(t)" && c21.u0.source() == "0" &&
                c21.theta0.source() == "0" && c21.horizon == 5.0,
            "case2_1 setup: Dirichlet heat, k=1, lambda=0.2*cos(t)*sin(t), zero data, start 1");
  const auto r21 = invert(c21);
  v.require(std::abs(r21.length - 2.0) <= 1e-3,
            fmt("case 2.1: L_c = %.9f (cost %.2e), |L_c - 2| <= 1e-3", r21.length, r21.final_cost));

  const auto c24 = load("case2_4");
  v.require(c24.system == SystemKind::BurgersHeatDN && c24.start == 1.4 &&
                c24.u0.source() == "0.1*x*(2-x)" && c24.theta0.source() == "0.1*(1+x^2*(x-3))",
            fmt("case2_4 setup: Neumann heat, k=%g, start 1.4", c24.coupling));
  const auto r24 = invert(c24);
  v.require(std::abs(r24.length - 2.0) <= 2e-2,
            fmt("case 2.4: L_c = %.9f (cost %.2e), |L_c - 2| <= 2e-2", r24.length, r24.final_cost));
  return v;
}

double max_abs(const Trajectory& t) {
  double m = 0.0;
  for (int j = 0; j < t.time().instants(); ++j) {
    for (double x : t.row(j)) m = std::max(m, std::abs(x));
  }
  return m;
}

Verdict criterion8() {
  Verdict v;
  SolverParams sp;
  sp.cells = 100;
  sp.steps = 2000;
  const TimeGrid tg(2.0, sp.steps);
  const SpatialGrid sg(2.0, sp.cells);
  const auto zero_t = BoundaryTrace::zeros(tg);
  const auto zero_x = sample_space([](double) { return 0.0; }, sg);
  const auto eta = sample_time([](double t) { return 5 * std::pow(std::sin(t), 3); }, tg);

  {
    double m = max_abs(solve_burgers({zero_t, zero_x}, sp));
    for (auto variant : {HeatBoundary::DirichletDirichlet, HeatBoundary::DirichletNeumann}) {
      const auto r = solve_burgers_heat(
          make_burgers_heat_problem(1.0, variant, zero_t, zero_t, zero_x, zero_x), sp);
      m = std::max({m, max_abs(r.u), max_abs(r.second)});
    }
    const auto ones_t = sample_time([](double) { return 1.0; }, tg);
    const auto ones_x = sample_space([](double) { return 1.0; }, sg);
    m = std::max(m, max_abs(solve_variable_density({zero_t, ones_t, zero_x, ones_x}, sp).u));
    v.require(m == 0.0, fmt("zero data gives zero solution for all solvers (max %.1e)", m));
  }

  {
    const auto e1 = sample_time([](double t) { return std::sin(2 * t); }, tg);
    const auto e2 = sample_time([](double t) { return t; }, tg);
    const auto e12 = sample_time([](double t) { return std::sin(2 * t) + t; }, tg);
    const auto v1 = sample_space([](double x) { return x * (2 - x); }, sg);
    const auto v2 = sample_space([](double x) { return std::sin(kPi * x); }, sg);
    const auto v12 = sample_space([](double x) { return x * (2 - x) + std::sin(kPi * x); }, sg);
    const auto a = solve_burgers({e1, v1, true}, sp);
    const auto b = solve_burgers({e2, v2, true}, sp);
    const auto c = solve_burgers({e12, v12, true}, sp);
    const auto ha = solve_burgers_heat(
        make_burgers_heat_problem(1.0, HeatBoundary::DirichletNeumann, e1, e2, v1, v2, true), sp);
    const auto hb = solve_burgers_heat(
        make_burgers_heat_problem(1.0, HeatBoundary::DirichletNeumann, e2, e1, v2, v1, true), sp);
    const auto hc = solve_burgers_heat(
        make_burgers_heat_problem(1.0, HeatBoundary::DirichletNeumann, e12, e12, v12, v12, true), sp);
    double m = 0.0;
    for (int j = 0; j <= sp.steps; ++j) {
      for (int i = 0; i <= sp.cells; ++i) {
        m = std::max(m, std::abs(a.at(j, i) + b.at(j, i) - c.at(j, i)));
        m = std::max(m, std::abs(ha.u.at(j, i) + hb.u.at(j, i) - hc.u.at(j, i)));
        m = std::max(m, std::abs(ha.second.at(j, i) + hb.second.at(j, i) - hc.second.at(j, i)));
      }
    }
    v.require(m <= 1e-10, fmt("linear-mode superposition defect %.2e <= 1e-10", m));
  }

  {
    const auto rho0 = sample_space([](double x) { return 2.0 + std::cos(3 * x); }, sg);
    const auto rhobar = sample_time([](double t) { return 2.0 + 0.9 * std::sin(5 * t); }, tg);
    const auto r = solve_variable_density({eta, rhobar, zero_x, rho0}, sp);
    const double lo = std::min(*std::ranges::min_element(rho0.values()),
                               *std::ranges::min_element(rhobar.values()));
    const double hi = std::max(*std::ranges::max_element(rho0.values()),
                               *std::ranges::max_element(rhobar.values()));
    double below = 0.0, above = 0.0;
    for (int j = 0; j <= sp.steps; ++j) {
      for (double x : r.second.row(j)) {
        below = std::max(below, lo - x);
        above = std::max(above, x - hi);
      }
    }
    v.require(below <= 0.0 && above <= 0.0,
              fmt("upwind density stays in [%.4f, %.4f] (overshoot %.1e, undershoot %.1e)", lo, hi,
                  std::max(above, 0.0), std::max(below, 0.0)));
  }

  {
    SolverParams fine;
    fine.steps = 5000;
    const TimeGrid t5(5.0, fine.steps);
    const SpatialGrid x2(2.0, fine.cells);
    const auto eta5 = sample_time([](double t) { return 5 * std::pow(std::sin(t), 3); }, t5);
    const auto u0 = sample_space([](double) { return 0.0; }, x2);
    const auto r = solve_variable_density(
        {eta5, sample_time([](double) { return 1.0; }, t5), u0,
         sample_space([](double) { return 1.0; }, x2)},
        fine);
    const auto b = solve_burgers({eta5, u0}, fine);
    double m = 0.0;
    for (int j = 0; j <= fine.steps; ++j) {
      for (int i = 0; i <= fine.cells; ++i) m = std::max(m, std::abs(r.u.at(j, i) - b.at(j, i)));
    }
    v.require(m <= 1e-10, fmt("unit density reduces to Burgers (max gap %.2e <= 1e-10)", m));
  }

  {
    auto c = load("case1_1");
    c.noise = 1.0;
    c.seed = 42;
    const auto base = fs::temp_directory_path() / "domlen_acceptance_rerun";
    fs::remove_all(base);
    run(c, base / "a");
    run(c, base / "b");
    auto m = load("case1_3");
    m.mode = RunMode::Multistart;
    run(m, base / "ma");
    run(m, base / "mb");
    bool same = true;
    for (const char* f : {"result.csv", "iterates.csv", "observation.csv"}) {
      same = same && slurp(base / "a" / f) == slurp(base / "b" / f) && !slurp(base / "a" / f).empty();
    }
    for (const char* f : {"result.csv", "iterates_1.csv", "iterates_2.csv", "observation.csv"}) {
      same = same && slurp(base / "ma" / f) == slurp(base / "mb" / f) && !slurp(base / "ma" / f).empty();
    }
    v.require(same, "reruns (noisy invert, concurrent multistart) are byte-identical");
  }

  {
    const auto c = load("variable_density");
    v.require(c.system == SystemKind::VariableDensity && c.eta.source() == "5*sin(t)^3" &&
                  c.rhobar.source() == "1" && c.rho0.source() == "1" && c.u0.source() == "0" &&
                  c.target_length == 2.0,
              "variable_density setup: ubar=5*sin(t)^3, rhobar=1, rho0=1, u0=0, L_d=2");
    const auto r = invert(c);
    v.require(std::abs(r.length - 2.0) <= 1e-2,
              fmt("Jvd reconstruction L_c = %.9f, |L_c - 2| <= 1e-2", r.length));
  }
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Verdict (*check)();
  };
  const Criterion criteria[] = {
      {1, "Case 1.1 noiseless reconstruction", criterion1},
      {2, "Case 1.1 noisy reconstructions", criterion2},
      {3, "Case 1.2 noiseless reconstruction", criterion3},
      {4, "Case 1.3 two minima", criterion4},
      {5, "convergence against the closed-form solution", criterion5},
      {6, "counter-example flux identity", criterion6},
      {7, "Burgers-heat Cases 2.1 and 2.4", criterion7},
      {8, "property suite", criterion8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s [%d] %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title);
    for (const auto& d : v.details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
