#include "domlen/config.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace domlen {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<double> to_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long long> to_integer(const std::string& s) {
  long long v = 0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

// Setters return an error message, or an empty string on success.
using Setter = std::function<std::string(ExperimentConfig&, const std::string&)>;

Setter real(double ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& v) -> std::string {
    const auto d = to_double(v);
    if (!d) return "expected a number, got '" + v + "'";
    c.*field = *d;
    return {};
  };
}

Setter optional_real(std::optional<double> ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& v) -> std::string {
    const auto d = to_double(v);
    if (!d) return "expected a number, got '" + v + "'";
    c.*field = *d;
    return {};
  };
}

Setter integer(int ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& v) -> std::string {
    const auto i = to_integer(v);
    if (!i || *i < -2147483647LL || *i > 2147483647LL) return "expected an integer, got '" + v + "'";
    c.*field = static_cast<int>(*i);
    return {};
  };
}

Setter boolean(bool ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& v) -> std::string {
    if (v == "true" || v == "1" || v == "yes") {
      c.*field = true;
    } else if (v == "false" || v == "0" || v == "no") {
      c.*field = false;
    } else {
      return "expected true or false, got '" + v + "'";
    }
    return {};
  };
}

enum class Variable { X, T };

Setter function_of(Expression ExperimentConfig::*field, Variable var) {
  return [field, var](ExperimentConfig& c, const std::string& v) -> std::string {
    try {
      Expression e = Expression::parse(v);
      if (var == Variable::X && e.uses_t()) return "initial data may depend on x only";
      if (var == Variable::T && e.uses_x()) return "boundary data may depend on t only";
      c.*field = std::move(e);
    } catch (const ExpressionError& e) {
      return std::string("malformed expression: ") + e.what();
    }
    return {};
  };
}

const std::map<std::string, SystemKind>& system_names() {
  static const std::map<std::string, SystemKind> names{
      {"burgers", SystemKind::Burgers},
      {"burgers_heat_dd", SystemKind::BurgersHeatDD},
      {"burgers_heat_dn", SystemKind::BurgersHeatDN},
      {"variable_density", SystemKind::VariableDensity},
  };
  return names;
}

const std::map<std::string, RunMode>& mode_names() {
  static const std::map<std::string, RunMode> names{
      {"forward", RunMode::Forward},         {"invert", RunMode::Invert},
      {"multistart", RunMode::Multistart},   {"table", RunMode::Table},
      {"oracle_check", RunMode::OracleCheck}, {"oracle-check", RunMode::OracleCheck},
      {"scan", RunMode::Scan},
  };
  return names;
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"name", [](ExperimentConfig& c, const std::string& v) -> std::string {
         c.name = v;
         return {};
       }},
      {"system", [](ExperimentConfig& c, const std::string& v) -> std::string {
         const auto it = system_names().find(v);
         if (it == system_names().end()) {
           return "unknown system '" + v +
                  "' (burgers, burgers_heat_dd, burgers_heat_dn, variable_density)";
         }
         c.system = it->second;
         return {};
       }},
      {"mode", [](ExperimentConfig& c, const std::string& v) -> std::string {
         const auto it = mode_names().find(v);
         if (it == mode_names().end()) {
           return "unknown mode '" + v + "' (forward, invert, multistart, table, oracle_check, scan)";
         }
         c.mode = it->second;
         return {};
       }},
      {"T", real(&ExperimentConfig::horizon)},
      {"N", integer(&ExperimentConfig::cells)},
      {"M", integer(&ExperimentConfig::steps)},
      {"k", real(&ExperimentConfig::coupling)},
      {"linear", boolean(&ExperimentConfig::linear)},
      {"eta", function_of(&ExperimentConfig::eta, Variable::T)},
      {"ubar", function_of(&ExperimentConfig::eta, Variable::T)},
      {"lambda", function_of(&ExperimentConfig::theta_boundary, Variable::T)},
      {"chi", function_of(&ExperimentConfig::theta_boundary, Variable::T)},
      {"rhobar", function_of(&ExperimentConfig::rhobar, Variable::T)},
      {"u0", function_of(&ExperimentConfig::u0, Variable::X)},
      {"theta0", function_of(&ExperimentConfig::theta0, Variable::X)},
      {"rho0", function_of(&ExperimentConfig::rho0, Variable::X)},
      {"L_d", real(&ExperimentConfig::target_length)},
      {"l_min", real(&ExperimentConfig::lower)},
      {"l_max", real(&ExperimentConfig::upper)},
      {"l_start", real(&ExperimentConfig::start)},
      {"starts", [](ExperimentConfig& c, const std::string& v) -> std::string {
         c.starts.clear();
         for (const auto& item : split_list(v)) {
           const auto d = to_double(item);
           if (!d) return "expected a comma-separated list of numbers, got '" + v + "'";
           c.starts.push_back(*d);
         }
         if (c.starts.empty()) return "starts must not be empty";
         return {};
       }},
      {"noise", real(&ExperimentConfig::noise)},
      {"seed", [](ExperimentConfig& c, const std::string& v) -> std::string {
         std::uint64_t s = 0;
         const char* end = v.data() + v.size();
         const auto [ptr, ec] = std::from_chars(v.data(), end, s);
         if (ec != std::errc() || ptr != end) return "expected an unsigned 64-bit seed, got '" + v + "'";
         c.seed = s;
         return {};
       }},
      {"method", [](ExperimentConfig& c, const std::string& v) -> std::string {
         if (v == "fd_gradient") {
           c.method = OptimizerMethod::FDGradientDescent;
         } else if (v == "golden") {
           c.method = OptimizerMethod::GoldenSection;
         } else {
           return "unknown method '" + v + "' (fd_gradient, golden)";
         }
         return {};
       }},
      {"tol_step", real(&ExperimentConfig::tol_step)},
      {"tol_cost", real(&ExperimentConfig::tol_cost)},
      {"max_iters", integer(&ExperimentConfig::max_iters)},
      {"fd_step", real(&ExperimentConfig::fd_step)},
      {"scan_from", optional_real(&ExperimentConfig::scan_from)},
      {"scan_to", optional_real(&ExperimentConfig::scan_to)},
      {"scan_step", real(&ExperimentConfig::scan_step)},
      {"table", [](ExperimentConfig& c, const std::string& v) -> std::string {
         if (v.empty()) return "table name must not be empty";
         c.table_name = v;
         return {};
       }},
      {"cfl_guard", boolean(&ExperimentConfig::cfl_guard)},
      {"courant_limit", real(&ExperimentConfig::courant_limit)},
      {"oracle_length", real(&ExperimentConfig::oracle_length)},
      {"oracle_mode", integer(&ExperimentConfig::oracle_mode)},
      {"oracle_offset", real(&ExperimentConfig::oracle_offset)},
      {"oracle_horizon", real(&ExperimentConfig::oracle_horizon)},
      {"oracle_dt_factor", real(&ExperimentConfig::oracle_dt_factor)},
      {"oracle_cells", [](ExperimentConfig& c, const std::string& v) -> std::string {
         c.oracle_cells.clear();
         for (const auto& item : split_list(v)) {
           const auto i = to_integer(item);
           if (!i || *i < 3 || *i > 1000000) return "oracle_cells needs integers >= 3, got '" + v + "'";
           c.oracle_cells.push_back(static_cast<int>(*i));
         }
         if (c.oracle_cells.size() < 2) return "oracle_cells needs at least two resolutions";
         return {};
       }},
      {"out", [](ExperimentConfig& c, const std::string& v) -> std::string {
         c.out_dir = v;
         return {};
       }},
  };
  return table;
}

void validate(const ExperimentConfig& c, const std::map<std::string, int>& seen,
              std::vector<ConfigIssue>& issues) {
  auto line_of = [&](const std::string& key) {
    const auto it = seen.find(key);
    return it == seen.end() ? 0 : it->second;
  };
  auto has = [&](const std::string& key) { return seen.count(key) > 0; };
  auto require = [&](const std::string& key, const std::string& why) {
    if (!has(key)) issues.push_back({0, "missing required key '" + key + "' (" + why + ")"});
  };
  auto reject = [&](const std::string& key, const std::string& why) {
    if (has(key)) issues.push_back({line_of(key), "key '" + key + "' " + why});
  };

  require("system", "one of burgers, burgers_heat_dd, burgers_heat_dn, variable_density");
  require("T", "time horizon");
  if (has("T") && !(c.horizon > 0.0)) issues.push_back({line_of("T"), "T must be positive"});
  if (c.cells < 3) issues.push_back({line_of("N"), "N must be at least 3"});
  if (c.steps < 1) issues.push_back({line_of("M"), "M must be at least 1"});
  if (c.noise < 0.0) issues.push_back({line_of("noise"), "noise must be nonnegative"});
  if (!(c.fd_step > 0.0)) issues.push_back({line_of("fd_step"), "fd_step must be positive"});
  if (!(c.tol_step > 0.0)) issues.push_back({line_of("tol_step"), "tol_step must be positive"});
  if (c.max_iters < 1) issues.push_back({line_of("max_iters"), "max_iters must be positive"});
  if (!(c.scan_step > 0.0)) issues.push_back({line_of("scan_step"), "scan_step must be positive"});

  if (has("system")) {
    const bool density = c.system == SystemKind::VariableDensity;
    if (density) {
      require("ubar", "boundary velocity for variable_density");
      require("rhobar", "inflow density for variable_density");
      require("rho0", "initial density for variable_density");
      reject("eta", "does not apply to variable_density; use ubar");
    } else {
      require("eta", "boundary datum at x = 0");
      reject("ubar", "applies to variable_density only; use eta");
      reject("rhobar", "applies to variable_density only");
      reject("rho0", "applies to variable_density only");
    }
    require("u0", "initial velocity");
    if (c.system != SystemKind::BurgersHeatDD) reject("lambda", "applies to burgers_heat_dd only");
    if (c.system != SystemKind::BurgersHeatDN) reject("chi", "applies to burgers_heat_dn only");
    if (c.system == SystemKind::Burgers || density) {
      reject("theta0", "applies to the burgers_heat systems only");
      reject("k", "applies to the burgers_heat systems only");
    }
  }

  const bool needs_bounds = c.mode == RunMode::Invert || c.mode == RunMode::Multistart ||
                            c.mode == RunMode::Table || c.mode == RunMode::Scan;
  if (c.mode != RunMode::OracleCheck) require("L_d", "interval length to solve or recover");
  if (has("L_d") && !(c.target_length > 0.0)) {
    issues.push_back({line_of("L_d"), "L_d must be positive"});
  }
  if (needs_bounds) {
    require("l_min", "lower bound on the length");
    require("l_max", "upper bound on the length");
  }
  if (has("l_min") && has("l_max")) {
    if (!(c.lower < c.upper)) {
      issues.push_back({line_of("l_min"), "l_min (" + exact(c.lower) +
                                              ") must be less than l_max (" + exact(c.upper) + ")"});
    } else {
      if (has("L_d") && !(c.lower < c.target_length && c.target_length < c.upper)) {
        issues.push_back({line_of("L_d"), "L_d must lie inside (l_min, l_max)"});
      }
      if (has("l_start") && !(c.lower < c.start && c.start < c.upper)) {
        issues.push_back({line_of("l_start"), "l_start must lie inside (l_min, l_max)"});
      }
      for (double s : c.starts) {
        if (!(c.lower < s && s < c.upper)) {
          issues.push_back({line_of("starts"), "start " + exact(s) + " lies outside (l_min, l_max)"});
        }
      }
    }
    if (has("l_min") && !(c.lower > 0.0)) issues.push_back({line_of("l_min"), "l_min must be positive"});
  }
  if (c.mode == RunMode::Invert || c.mode == RunMode::Table) {
    require("l_start", "initial guess for the length");
  }
  if (c.mode == RunMode::Multistart) require("starts", "comma-separated initial guesses");
  if (c.scan_from && c.scan_to && !(*c.scan_from < *c.scan_to)) {
    issues.push_back({line_of("scan_from"), "scan_from must be less than scan_to"});
  }
  if (c.mode == RunMode::OracleCheck) {
    if (!(std::abs(c.oracle_offset) > 1.0)) {
      issues.push_back({line_of("oracle_offset"), "oracle_offset must exceed 1 in magnitude"});
    }
    if (c.oracle_mode < 1) issues.push_back({line_of("oracle_mode"), "oracle_mode must be positive"});
    if (!(c.oracle_length > 0.0) || !(c.oracle_horizon > 0.0) || !(c.oracle_dt_factor > 0.0)) {
      issues.push_back({0, "oracle_length, oracle_horizon and oracle_dt_factor must be positive"});
    }
  }
}

}  // namespace

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::Burgers: return "burgers";
    case SystemKind::BurgersHeatDD: return "burgers_heat_dd";
    case SystemKind::BurgersHeatDN: return "burgers_heat_dn";
    case SystemKind::VariableDensity: return "variable_density";
  }
  return "unknown";
}

std::string_view to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Forward: return "forward";
    case RunMode::Invert: return "invert";
    case RunMode::Multistart: return "multistart";
    case RunMode::Table: return "table";
    case RunMode::OracleCheck: return "oracle_check";
    case RunMode::Scan: return "scan";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<ConfigIssue>& issues) {
  std::ostringstream out;
  out << issues.size() << " configuration error" << (issues.size() == 1 ? "" : "s");
  for (const auto& issue : issues) {
    out << "\n  ";
    if (issue.line > 0) out << "line " << issue.line << ": ";
    out << issue.message;
  }
  return out.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  std::vector<ConfigIssue> issues;
  std::map<std::string, int> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      issues.push_back({line_no, "expected 'key = value'"});
      continue;
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      issues.push_back({line_no, "unknown key '" + key + "'"});
      continue;
    }
    if (const auto prev = seen.find(key); prev != seen.end()) {
      issues.push_back({line_no, "duplicate key '" + key + "' (first set on line " +
                                     std::to_string(prev->second) + ")"});
      continue;
    }
    seen[key] = line_no;
    if (const std::string err = it->second(cfg, value); !err.empty()) {
      issues.push_back({line_no, key + ": " + err});
    }
  }

  validate(cfg, seen, issues);
  if (!issues.empty()) {
    // Located issues in file order, then the ones about missing keys.
    std::ranges::stable_sort(issues, [](const ConfigIssue& a, const ConfigIssue& b) {
      return (a.line == 0 ? INT_MAX : a.line) < (b.line == 0 ? INT_MAX : b.line);
    });
    throw ConfigError(std::move(issues));
  }
  return cfg;
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  auto put = [&](const std::string& key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  auto list = [](const auto& values, auto fmt) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ", ";
      s += fmt(values[i]);
    }
    return s;
  };

  if (!c.name.empty()) put("name", c.name);
  put("system", std::string(to_string(c.system)));
  put("mode", std::string(to_string(c.mode)));
  put("T", exact(c.horizon));
  put("N", std::to_string(c.cells));
  put("M", std::to_string(c.steps));
  put("linear", c.linear ? "true" : "false");
  put("cfl_guard", c.cfl_guard ? "true" : "false");
  put("courant_limit", exact(c.courant_limit));

  switch (c.system) {
    case SystemKind::Burgers:
      put("eta", c.eta.source());
      put("u0", c.u0.source());
      break;
    case SystemKind::BurgersHeatDD:
    case SystemKind::BurgersHeatDN:
      put("k", exact(c.coupling));
      put("eta", c.eta.source());
      put(c.system == SystemKind::BurgersHeatDD ? "lambda" : "chi", c.theta_boundary.source());
      put("u0", c.u0.source());
      put("theta0", c.theta0.source());
      break;
    case SystemKind::VariableDensity:
      put("ubar", c.eta.source());
      put("rhobar", c.rhobar.source());
      put("u0", c.u0.source());
      put("rho0", c.rho0.source());
      break;
  }

  if (c.mode != RunMode::OracleCheck || c.target_length > 0.0) put("L_d", exact(c.target_length));
  if (c.lower < c.upper) {
    put("l_min", exact(c.lower));
    put("l_max", exact(c.upper));
  }
  if (c.lower < c.start && c.start < c.upper) put("l_start", exact(c.start));
  if (!c.starts.empty()) put("starts", list(c.starts, [](double v) { return exact(v); }));
  put("noise", exact(c.noise));
  put("seed", std::to_string(c.seed));
  put("method", c.method == OptimizerMethod::GoldenSection ? "golden" : "fd_gradient");
  put("tol_step", exact(c.tol_step));
  put("tol_cost", exact(c.tol_cost));
  put("max_iters", std::to_string(c.max_iters));
  put("fd_step", exact(c.fd_step));
  if (c.scan_from) put("scan_from", exact(*c.scan_from));
  if (c.scan_to) put("scan_to", exact(*c.scan_to));
  put("scan_step", exact(c.scan_step));
  put("table", c.table_name);
  put("oracle_length", exact(c.oracle_length));
  put("oracle_mode", std::to_string(c.oracle_mode));
  put("oracle_offset", exact(c.oracle_offset));
  put("oracle_horizon", exact(c.oracle_horizon));
  put("oracle_dt_factor", exact(c.oracle_dt_factor));
  put("oracle_cells", list(c.oracle_cells, [](int v) { return std::to_string(v); }));
  if (!c.out_dir.empty()) put("out", c.out_dir);
  return out.str();
}

SolverParams ExperimentConfig::solver_params() const {
  return SolverParams{.cells = cells,
                      .steps = steps,
                      .cfl_guard = cfl_guard,
                      .implicit_courant_limit = courant_limit};
}

OptimizerConfig ExperimentConfig::optimizer_config() const {
  return OptimizerConfig{.lower = lower,
                         .upper = upper,
                         .start = start,
                         .method = method,
                         .tol_step = tol_step,
                         .tol_cost = tol_cost,
                         .max_iters = max_iters,
                         .fd_step = fd_step};
}

SystemTemplate ExperimentConfig::system_template() const {
  auto of_t = [](const Expression& e) -> TimeFunction { return [e](double t) { return e.of_t(t); }; };
  auto of_x = [](const Expression& e) -> SpaceFunction { return [e](double x) { return e.of_x(x); }; };
  switch (system) {
    case SystemKind::Burgers:
      return BurgersTemplate{.horizon = horizon, .eta = of_t(eta), .u0 = of_x(u0), .linear = linear};
    case SystemKind::BurgersHeatDD:
    case SystemKind::BurgersHeatDN:
      return BurgersHeatTemplate{
          .horizon = horizon,
          .coupling = coupling,
          .variant = system == SystemKind::BurgersHeatDD ? HeatBoundary::DirichletDirichlet
                                                         : HeatBoundary::DirichletNeumann,
          .eta = of_t(eta),
          .theta_boundary = of_t(theta_boundary),
          .u0 = of_x(u0),
          .theta0 = of_x(theta0),
          .linear = linear};
    case SystemKind::VariableDensity:
      return VariableDensityTemplate{.horizon = horizon,
                                     .ubar = of_t(eta),
                                     .rhobar = of_t(rhobar),
                                     .u0 = of_x(u0),
                                     .rho0 = of_x(rho0)};
  }
  throw std::logic_error("unknown system");
}

}  // namespace domlen
