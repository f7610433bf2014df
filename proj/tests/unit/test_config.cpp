#include "domlen/config.hpp"
#include "domlen/expression.hpp"
#include "domlen/runner.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace domlen {
namespace {

TEST(Expression, Arithmetic) {
  EXPECT_EQ(Expression::parse("1 + 2*3")(0, 0), 7.0);
  EXPECT_EQ(Expression::parse("2^3^2")(0, 0), 512.0);
  EXPECT_EQ(Expression::parse("-2^2")(0, 0), -4.0);
  EXPECT_EQ(Expression::parse("(1-4)/2")(0, 0), -1.5);
  EXPECT_DOUBLE_EQ(Expression::parse("1.5e-1")(0, 0), 0.15);
  EXPECT_DOUBLE_EQ(Expression::parse("pi")(0, 0), std::numbers::pi);
}

TEST(Expression, Variables) {
  auto e = Expression::parse("5*sin(t)^3");
  EXPECT_TRUE(e.uses_t());
  EXPECT_FALSE(e.uses_x());
  EXPECT_DOUBLE_EQ(e.of_t(1.2), 5 * std::pow(std::sin(1.2), 3));

  auto u = Expression::parse("pi*sin(pi*x/2)/(2+cos(pi*x/2))");
  EXPECT_NEAR(u.of_x(1.0), std::numbers::pi / 2, 1e-15);
  EXPECT_EQ(u.source(), "pi*sin(pi*x/2)/(2+cos(pi*x/2))");
}

TEST(Expression, Errors) {
  EXPECT_THROW(Expression::parse(""), ExpressionError);
  EXPECT_THROW(Expression::parse("1 +"), ExpressionError);
  EXPECT_THROW(Expression::parse("tan(x)"), ExpressionError);
  EXPECT_THROW(Expression::parse("(x"), ExpressionError);
  try {
    Expression::parse("x + y");
    FAIL();
  } catch (const ExpressionError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Config, MinimalForwardDefaults) {
  auto c = parse_config("system = burgers\nmode = forward\nT = 1\neta = 0\nu0 = 0\nL_d = 2\n");
  EXPECT_EQ(c.cells, 200);
  EXPECT_EQ(c.steps, 1000);
  EXPECT_EQ(c.system, SystemKind::Burgers);
  EXPECT_EQ(c.mode, RunMode::Forward);
  EXPECT_EQ(c.coupling, 1.0);
  EXPECT_EQ(c.noise, 0.0);
}

TEST(Config, ShippedCase1_1) {
  auto c = parse_config(load_config_text("case1_1"));
  EXPECT_EQ(c.horizon, 5.0);
  EXPECT_EQ(c.eta.source(), "5*sin(t)^3");
  EXPECT_EQ(c.u0.source(), "0");
  EXPECT_EQ(c.target_length, 2.0);
  EXPECT_EQ(c.start, 3.0);
  EXPECT_EQ(c.lower, 1.2);
  EXPECT_EQ(c.upper, 3.5);
  EXPECT_EQ(c.mode, RunMode::Invert);
}

TEST(Config, AllShippedCasesParse) {
  auto names = shipped_cases();
  EXPECT_GE(names.size(), 7u);
  for (const auto& n : names) {
    SCOPED_TRACE(n);
    EXPECT_NO_THROW(parse_config(load_config_text(n)));
  }
}

TEST(Config, BoundsOrderNamesBothKeys) {
  try {
    parse_config("system = burgers\nmode = invert\nL_d = 2\nl_min = 3\nl_max = 1\nl_start = 2\n");
    FAIL();
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("l_min"), std::string::npos);
    EXPECT_NE(what.find("l_max"), std::string::npos);
  }
}

TEST(Config, CollectsEveryIssue) {
  try {
    parse_config("system = nope\nN = -3\neta = sin(\nbogus = 1\nnoline\n");
    FAIL();
  } catch (const ConfigError& e) {
    // Every offending line is reported, in order, before the missing keys.
    std::vector<int> located;
    for (const auto& issue : e.issues()) {
      if (issue.line > 0) located.push_back(issue.line);
    }
    EXPECT_EQ(located, (std::vector<int>{1, 2, 3, 4, 5}));
    EXPECT_EQ(e.issues().back().line, 0);
  }
}

TEST(Config, SerializeRoundTrip) {
  for (const auto& n : shipped_cases()) {
    SCOPED_TRACE(n);
    auto a = parse_config(load_config_text(n));
    auto text = serialize_config(a);
    auto b = parse_config(text);
    EXPECT_EQ(serialize_config(b), text);
    EXPECT_EQ(a.eta.source(), b.eta.source());
    EXPECT_EQ(a.starts, b.starts);
    EXPECT_EQ(a.coupling, b.coupling);
  }
}

TEST(Config, DerivedSettings) {
  auto c = parse_config(load_config_text("case2_4"));
  auto tpl = c.system_template();
  ASSERT_TRUE(std::holds_alternative<BurgersHeatTemplate>(tpl));
  EXPECT_EQ(std::get<BurgersHeatTemplate>(tpl).variant, HeatBoundary::DirichletNeumann);
  EXPECT_EQ(c.optimizer_config().start, 1.4);
  EXPECT_EQ(c.solver_params().cells, 200);
}

}  // namespace
}  // namespace domlen
