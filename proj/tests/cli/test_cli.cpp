// Drives the built domlen executable end to end.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(DOMLEN_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("domlen_cli_" + name);
  fs::remove_all(p);
  return p;
}

fs::path write_config(const std::string& name, const std::string& text) {
  auto p = fs::temp_directory_path() / ("domlen_cli_" + name + ".cfg");
  std::ofstream(p) << text;
  return p;
}

TEST(Cli, ListCases) {
  auto r = run_cli("--list-cases");
  EXPECT_EQ(r.code, 0);
  for (const char* name : {"case1_1", "case1_3", "case2_4"}) {
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  }
}

TEST(Cli, InvertIsByteIdenticalAcrossRuns) {
  auto a = scratch("rerun_a"), b = scratch("rerun_b");
  ASSERT_EQ(run_cli("invert --config case1_1 --noise 1 --seed 3 --out " + a.string()).code, 0);
  ASSERT_EQ(run_cli("invert --config case1_1 --noise 1 --seed 3 --out " + b.string()).code, 0);
  for (const char* f : {"result.csv", "iterates.csv", "observation.csv"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    EXPECT_FALSE(slurp(a / f).empty()) << f;
  }
  EXPECT_NE(slurp(a / "result.csv").find(",1,3,"), std::string::npos);
}

TEST(Cli, TableIsByteIdenticalAcrossRuns) {
  auto a = scratch("table_a"), b = scratch("table_b");
  ASSERT_EQ(run_cli("table1 --seed 11 --out " + a.string()).code, 0);
  ASSERT_EQ(run_cli("table1 --seed 11 --out " + b.string()).code, 0);
  EXPECT_EQ(slurp(a / "table1.csv"), slurp(b / "table1.csv"));
}

TEST(Cli, OracleCheck) {
  auto d = scratch("oracle");
  ASSERT_EQ(run_cli("oracle-check --out " + d.string()).code, 0);
  const auto text = slurp(d / "convergence.csv");
  EXPECT_EQ(text.substr(0, text.find('\n')), "N,M,dx,dt,linf_error,order");
}

TEST(Cli, ConfigErrorExitCode) {
  auto cfg = write_config("bad", "system = burgers\nl_min = 3\nl_max = 1\nl_start = 2\n");
  auto r = run_cli("invert --config " + cfg.string() + " --out " + scratch("bad").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("l_max"), std::string::npos);
  EXPECT_EQ(run_cli("invert").code, 1);
  EXPECT_EQ(run_cli("nonsense --config case1_1").code, 1);
}

TEST(Cli, SolverFailureExitCode) {
  auto cfg = write_config("blowup", "system = burgers\nT = 5\nM = 10\nL_d = 1\neta = 80*sin(t)\nu0 = 0\n");
  EXPECT_EQ(run_cli("forward --config " + cfg.string() + " --out " + scratch("blowup").string()).code,
            2);
}

TEST(Cli, NonConvergenceExitCode) {
  auto cfg = write_config("noconv",
                          "system = burgers\nT = 5\neta = 5*sin(t)^3\nu0 = 0\nL_d = 2\nl_min = 1.2\n"
                          "l_max = 3.5\nl_start = 3\nmax_iters = 1\n");
  auto d = scratch("noconv");
  EXPECT_EQ(run_cli("invert --config " + cfg.string() + " --out " + d.string()).code, 3);
  EXPECT_TRUE(fs::exists(d / "result.csv"));
}

}  // namespace
