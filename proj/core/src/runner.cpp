#include "domlen/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "domlen/csv.hpp"
#include "domlen/error.hpp"
#include "domlen/forward.hpp"
#include "domlen/trace_ops.hpp"

#ifndef DOMLEN_CONFIG_DIR
#define DOMLEN_CONFIG_DIR "configs"
#endif

namespace domlen {

namespace fs = std::filesystem;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> time_axis(const TimeGrid& grid) {
  std::vector<double> t(static_cast<std::size_t>(grid.instants()));
  for (int j = 0; j < grid.instants(); ++j) t[static_cast<std::size_t>(j)] = grid.instant(j);
  return t;
}

std::vector<double> to_vector(const BoundaryTrace& trace) {
  return {trace.values().begin(), trace.values().end()};
}

std::string flag(bool b) { return b ? "true" : "false"; }

int accepted_steps(const OptResult& r) { return static_cast<int>(r.iterates.size()) - 1; }

CsvRow result_row(const OptResult& r) {
  return {format_number(r.length),   format_number(r.final_cost),
          std::to_string(accepted_steps(r)), std::to_string(r.evaluations),
          flag(r.converged),         std::string(to_string(r.reason))};
}

const CsvRow kResultColumns{"L_c", "final_cost", "iterations", "evaluations", "converged", "reason"};

void write_iterates(const fs::path& path, const OptResult& r) {
  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < r.iterates.size(); ++i) {
    rows.push_back({std::to_string(i), format_number(r.iterates[i].length),
                    format_number(r.iterates[i].cost)});
  }
  write_csv(path, {"iteration", "length", "cost"}, rows);
}

std::optional<std::string> compatibility_at(const SystemTemplate& system, double length,
                                            const SolverParams& params) {
  return std::visit([&](const auto& s) { return compatibility_warning(s.instantiate(length, params)); },
                    system);
}

class Session {
 public:
  Session(const ExperimentConfig& cfg, fs::path out_dir) : cfg_(cfg), out_(std::move(out_dir)) {
    report_.config = cfg;
    fs::create_directories(out_);
  }

  RunReport finish(std::chrono::steady_clock::time_point started) {
    report_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    for (const auto& r : report_.results) {
      if (!r.converged) report_.exit_code = exit_code::kNonConvergence;
    }
    return std::move(report_);
  }

  void forward() {
    const auto system = cfg_.system_template();
    const auto params = cfg_.solver_params();
    note_compatibility(system, cfg_.target_length, params);
    std::visit(overloaded{
                   [&](const BurgersTemplate& s) {
                     const auto u = solve_burgers(s.instantiate(cfg_.target_length, params), params);
                     emit_forward(u, nullptr, "", {{"beta", to_vector(boundary_flux(u))}});
                   },
                   [&](const BurgersHeatTemplate& s) {
                     const auto sol =
                         solve_burgers_heat(s.instantiate(cfg_.target_length, params), params);
                     emit_forward(sol.u, &sol.second, "theta_trajectory.csv",
                                  {{"beta", to_vector(boundary_flux(sol.u))},
                                   {"alpha", to_vector(boundary_flux(sol.second))},
                                   {"zeta", to_vector(boundary_value(sol.second))}});
                   },
                   [&](const VariableDensityTemplate& s) {
                     const auto problem = s.instantiate(cfg_.target_length, params);
                     const auto sol = solve_variable_density(problem, params);
                     std::vector<double> gamma(problem.ubar.size());
                     for (std::size_t j = 0; j < gamma.size(); ++j) {
                       gamma[j] = problem.ubar[j] <= 0.0 ? sol.second.at(static_cast<int>(j), 0) : 0.0;
                     }
                     emit_forward(sol.u, &sol.second, "rho_trajectory.csv",
                                  {{"beta", to_vector(boundary_flux(sol.u))}, {"gamma", gamma}});
                   },
               },
               system);
  }

  void invert() {
    const CostSpec spec = cost_spec(NoiseSpec{cfg_.noise, cfg_.seed});
    const OptResult result = minimize(spec, cfg_.optimizer_config());
    write_iterates(path("iterates.csv"), result);

    CsvRow header{"L_d", "noise_percent", "seed"};
    header.insert(header.end(), kResultColumns.begin(), kResultColumns.end());
    CsvRow row{format_number(cfg_.target_length), format_number(cfg_.noise), std::to_string(cfg_.seed)};
    const CsvRow tail = result_row(result);
    row.insert(row.end(), tail.begin(), tail.end());
    write_csv(path("result.csv"), header, {row});

    std::vector<PlotSeries> series{{"t", time_axis(spec.target.grid())},
                                   {"beta_target", to_vector(spec.target.beta)}};
    append_fit(series, spec, result.length, "fit");
    write_plotdata(path("observation.csv"), series);

    summarize("L_c", result);
    report_.results.push_back(result);
  }

  void multistart() {
    const CostSpec spec = cost_spec(NoiseSpec{cfg_.noise, cfg_.seed});
    const auto results = multi_start(spec, cfg_.starts, cfg_.optimizer_config());
    std::vector<CsvRow> rows;
    std::vector<PlotSeries> series{{"t", time_axis(spec.target.grid())},
                                   {"beta_target", to_vector(spec.target.beta)}};
    for (std::size_t i = 0; i < results.size(); ++i) {
      CsvRow row{std::to_string(i + 1), format_number(cfg_.starts[i])};
      const CsvRow tail = result_row(results[i]);
      row.insert(row.end(), tail.begin(), tail.end());
      rows.push_back(std::move(row));
      write_iterates(path("iterates_" + std::to_string(i + 1) + ".csv"), results[i]);
      append_fit(series, spec, results[i].length, "fit_" + std::to_string(i + 1));
      summarize("L_c[" + std::to_string(i + 1) + "]", results[i]);
    }
    CsvRow header{"run", "start"};
    header.insert(header.end(), kResultColumns.begin(), kResultColumns.end());
    write_csv(path("result.csv"), header, rows);
    write_plotdata(path("observation.csv"), series);
    report_.results.insert(report_.results.end(), results.begin(), results.end());
  }

  void scan() {
    const CostSpec spec = cost_spec(NoiseSpec{cfg_.noise, cfg_.seed});
    const double from = cfg_.scan_from.value_or(cfg_.lower);
    const double to = cfg_.scan_to.value_or(cfg_.upper);
    const auto points = scan_cost(spec, from, to, cfg_.scan_step);
    std::vector<CsvRow> rows;
    for (const auto& p : points) rows.push_back({format_number(p.length), format_number(p.cost)});
    write_csv(path("scan.csv"), {"length", "cost"}, rows);
    std::ostringstream msg;
    msg << "scan over [" << from << ", " << to << "]: " << count_basins(points, 1e-6)
        << " basin(s) below 1e-6";
    report_.notes.push_back(msg.str());
  }

  void table() {
    const auto rows = reproduce_table(cfg_);
    std::vector<CsvRow> csv;
    for (const auto& row : rows) {
      csv.push_back({format_number(row.noise_percent), format_number(row.result.final_cost),
                     std::to_string(accepted_steps(row.result)), format_number(row.result.length)});
      std::ostringstream label;
      label << "L_c at " << row.noise_percent << "% noise";
      summarize(label.str(), row.result);
      report_.results.push_back(row.result);
    }
    write_csv(path(cfg_.table_name + ".csv"), {"noise_percent", "final_cost", "iterates", "L_c"}, csv);
  }

  void oracle_check() {
    const ColeHopfSolution exact(cfg_.oracle_length, cfg_.oracle_mode, cfg_.oracle_offset);
    const auto rows =
        oracle_convergence_study(exact, cfg_.oracle_horizon, cfg_.oracle_cells, cfg_.oracle_dt_factor);
    std::vector<CsvRow> csv;
    for (const auto& r : rows) {
      csv.push_back({std::to_string(r.cells), std::to_string(r.steps), format_number(r.dx),
                     format_number(r.dt), format_number(r.linf_error),
                     r.order ? format_number(*r.order) : std::string("")});
    }
    write_csv(path("convergence.csv"), {"N", "M", "dx", "dt", "linf_error", "order"}, csv);
    std::ostringstream msg;
    msg << "oracle check: finest error " << rows.back().linf_error;
    if (rows.back().order) msg << ", last empirical order " << *rows.back().order;
    report_.notes.push_back(msg.str());
  }

 private:
  fs::path path(const std::string& file) {
    fs::path p = out_ / file;
    report_.manifest.push_back(p);
    return p;
  }

  CostSpec cost_spec(const NoiseSpec& noise) {
    CostSpec spec = make_cost_spec(cfg_, noise);
    note_compatibility(spec.system, cfg_.target_length, spec.params);
    return spec;
  }

  void note_compatibility(const SystemTemplate& system, double length, const SolverParams& params) {
    if (auto w = compatibility_at(system, length, params)) {
      report_.notes.push_back("warning: incompatible initial/boundary data at length " +
                              format_number(length) + ": " + *w);
    }
  }

  void append_fit(std::vector<PlotSeries>& series, const CostSpec& spec, double length,
                  const std::string& name) {
    try {
      const auto fit = observe(spec.system, length, spec.params);
      series.push_back({"beta_" + name, to_vector(fit.beta)});
    } catch (const SolverError& e) {
      report_.notes.push_back(std::string("warning: no fitted trace: ") + e.what());
    }
  }

  void summarize(const std::string& label, const OptResult& r) {
    std::ostringstream msg;
    msg.precision(10);
    msg << label << " = " << r.length << ", cost " << r.final_cost << ", " << accepted_steps(r)
        << " iterations, " << r.evaluations << " evaluations, " << to_string(r.reason);
    if (!r.diagnostic.empty()) msg << " (" << r.diagnostic << ")";
    report_.notes.push_back(msg.str());
  }

  void emit_forward(const Trajectory& u, const Trajectory* second, const std::string& second_name,
                    std::vector<PlotSeries> traces) {
    write_trajectory(path("trajectory.csv"), u);
    if (second) write_trajectory(path(second_name), *second);
    traces.insert(traces.begin(), PlotSeries{"t", time_axis(u.time())});
    write_plotdata(path("observation.csv"), traces);
    double peak = 0.0;
    for (int j = 0; j < u.time().instants(); ++j) {
      for (double v : u.row(j)) peak = std::max(peak, std::abs(v));
    }
    write_csv(path("result.csv"), {"length", "horizon", "cells", "steps", "max_abs_u"},
              {{format_number(u.space().length()), format_number(u.time().horizon()),
                std::to_string(u.space().cells()), std::to_string(u.time().steps()),
                format_number(peak)}});
  }

  const ExperimentConfig& cfg_;
  fs::path out_;
  RunReport report_;
};

}  // namespace

RunReport run(const ExperimentConfig& cfg, const fs::path& out_dir) {
  const auto started = std::chrono::steady_clock::now();
  Session session(cfg, out_dir);
  switch (cfg.mode) {
    case RunMode::Forward: session.forward(); break;
    case RunMode::Invert: session.invert(); break;
    case RunMode::Multistart: session.multistart(); break;
    case RunMode::Table: session.table(); break;
    case RunMode::OracleCheck: session.oracle_check(); break;
    case RunMode::Scan: session.scan(); break;
  }
  return session.finish(started);
}

std::vector<ConvergenceRow> oracle_convergence_study(const ColeHopfSolution& exact, double horizon,
                                                     const std::vector<int>& cells,
                                                     double dt_factor) {
  std::vector<ConvergenceRow> rows;
  for (int n : cells) {
    const SpatialGrid space(exact.length(), n);
    const double dx = space.spacing();
    const int steps = std::max(1, static_cast<int>(std::lround(horizon / (dt_factor * dx * dx))));
    const TimeGrid time(horizon, steps);
    const SolverParams params{.cells = n, .steps = steps};
    const BurgersProblem problem{
        .eta = BoundaryTrace::zeros(time),
        .u0 = sample_space([&](double x) { return cole_hopf_u(exact, x, 0.0); }, space)};
    const Trajectory u = solve_burgers(problem, params);

    double err = 0.0;
    for (int j = 0; j < time.instants(); ++j) {
      const double t = time.instant(j);
      for (int i = 0; i < space.nodes(); ++i) {
        err = std::max(err, std::abs(u.at(j, i) - cole_hopf_u(exact, space.node(i), t)));
      }
    }
    ConvergenceRow row{n, steps, dx, time.step(), err, std::nullopt};
    if (!rows.empty()) {
      const auto& prev = rows.back();
      row.order = std::log(prev.linf_error / err) / std::log(static_cast<double>(n) / prev.cells);
    }
    rows.push_back(row);
  }
  return rows;
}

CostSpec make_cost_spec(const ExperimentConfig& cfg, const NoiseSpec& noise) {
  const auto system = cfg.system_template();
  const auto params = cfg.solver_params();
  const Functional functional = default_functional(system);
  return CostSpec{.functional = functional,
                  .system = system,
                  .target = make_target(system, functional, cfg.target_length, params, noise),
                  .params = params};
}

std::vector<TableRow> reproduce_table(const ExperimentConfig& cfg) {
  const OptimizerConfig opt = cfg.optimizer_config();

  std::vector<std::future<TableRow>> jobs;
  for (std::size_t i = 0; i < kTableNoiseLevels.size(); ++i) {
    const double percent = kTableNoiseLevels[i];
    const std::uint64_t seed = cfg.seed + i;
    jobs.push_back(std::async(std::launch::async, [&cfg, &opt, percent, seed] {
      return TableRow{percent, seed, minimize(make_cost_spec(cfg, {percent, seed}), opt)};
    }));
  }
  std::vector<TableRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

fs::path shipped_config_dir() {
  if (const char* env = std::getenv("DOMLEN_CONFIG_DIR"); env && *env) return env;
  return DOMLEN_CONFIG_DIR;
}

std::vector<std::string> shipped_cases() {
  std::vector<std::string> names;
  const fs::path dir = shipped_config_dir();
  if (!fs::is_directory(dir)) return names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".cfg") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::string load_config_text(const std::string& name_or_path) {
  fs::path p(name_or_path);
  if (!fs::is_regular_file(p)) {
    const fs::path shipped = shipped_config_dir() / (name_or_path + ".cfg");
    if (!fs::is_regular_file(shipped)) {
      throw std::runtime_error("no config file or shipped case named '" + name_or_path + "'");
    }
    p = shipped;
  }
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + p.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace domlen
