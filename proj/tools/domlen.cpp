// Command-line front end: domlen <mode> --config <path> [--out <dir>] [--seed <u64>] [--noise <percent>]

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "domlen/config.hpp"
#include "domlen/error.hpp"
#include "domlen/runner.hpp"

namespace {

domlen::RunMode mode_from_cli(const std::string& name, std::string& table_name) {
  if (name == "forward") return domlen::RunMode::Forward;
  if (name == "invert") return domlen::RunMode::Invert;
  if (name == "multistart") return domlen::RunMode::Multistart;
  if (name == "scan") return domlen::RunMode::Scan;
  if (name == "oracle-check") return domlen::RunMode::OracleCheck;
  table_name = name;  // table1 | table2
  return domlen::RunMode::Table;
}

std::string default_case(const std::string& mode) {
  if (mode == "table1") return "case1_1";
  if (mode == "table2") return "case1_2";
  if (mode == "oracle-check") return "oracle";
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-length identification for Burgers-type systems"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::string mode;
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> noise;
  bool list_cases = false;

  app.add_option("mode", mode, "forward|invert|multistart|table1|table2|oracle-check|scan")
      ->check(CLI::IsMember(
          {"forward", "invert", "multistart", "table1", "table2", "oracle-check", "scan"}));
  app.add_option("-c,--config", config_path, "Config file or shipped case name");
  app.add_option("-o,--out", out_dir, "Output directory (default: config 'out' or ./out)");
  app.add_option("--seed", seed, "Noise seed");
  app.add_option("--noise", noise, "Noise level in percent")->check(CLI::NonNegativeNumber);
  app.add_flag("--list-cases", list_cases, "Print the shipped case configs and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : domlen::exit_code::kConfigError;
  }

  if (list_cases) {
    for (const auto& name : domlen::shipped_cases()) std::cout << name << '\n';
    return domlen::exit_code::kSuccess;
  }
  if (mode.empty()) {
    std::cerr << "error: a mode is required\n" << app.help();
    return domlen::exit_code::kConfigError;
  }
  if (config_path.empty()) config_path = default_case(mode);
  if (config_path.empty()) {
    std::cerr << "error: --config is required for mode " << mode << '\n';
    return domlen::exit_code::kConfigError;
  }

  domlen::ExperimentConfig cfg;
  try {
    cfg = domlen::parse_config(domlen::load_config_text(config_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << config_path << ": " << e.what() << '\n';
    return domlen::exit_code::kConfigError;
  }

  std::string table_name = cfg.table_name;
  cfg.mode = mode_from_cli(mode, table_name);
  cfg.table_name = table_name;
  if (seed) cfg.seed = *seed;
  if (noise) cfg.noise = *noise;
  if (out_dir.empty()) out_dir = cfg.out_dir.empty() ? "out" : cfg.out_dir;

  try {
    const domlen::RunReport report = domlen::run(cfg, out_dir);
    for (const auto& note : report.notes) std::cout << note << '\n';
    std::cout << "files:\n";
    for (const auto& file : report.manifest) std::cout << "  " << file.string() << '\n';
    std::cout << "wall-clock: " << report.wall_seconds << " s\n";
    if (report.exit_code == domlen::exit_code::kNonConvergence) {
      std::cerr << "warning: at least one optimization did not converge\n";
    }
    return report.exit_code;
  } catch (const domlen::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return domlen::exit_code::kSolverFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid setup: " << e.what() << '\n';
    return domlen::exit_code::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return domlen::exit_code::kSolverFailure;
  }
}
