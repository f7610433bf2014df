#include "domlen/trace_ops.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace domlen {
namespace {

Trajectory fill(double length, int cells, double horizon, int steps, auto f) {
  Trajectory tr(SpatialGrid(length, cells), TimeGrid(horizon, steps));
  for (int j = 0; j <= steps; ++j) {
    auto r = tr.row(j);
    for (int i = 0; i <= cells; ++i) r[i] = f(tr.space().node(i), tr.time().instant(j));
  }
  return tr;
}

TEST(BoundaryFlux, ConstantField) {
  auto tr = fill(2.0, 10, 1.0, 4, [](double, double) { return 3.7; });
  auto b = boundary_flux(tr);
  for (double v : b.values()) EXPECT_NEAR(v, 0.0, 1e-13);
}

TEST(BoundaryFlux, LinearField) {
  auto tr = fill(1.3, 17, 1.0, 3, [](double x, double t) { return (2.5 + t) * x; });
  auto b = boundary_flux(tr);
  for (int j = 0; j <= 3; ++j) EXPECT_NEAR(b[j], 2.5 + tr.time().instant(j), 1e-12);
}

TEST(BoundaryFlux, ExactOnQuadratics) {
  auto sq = fill(1.0, 8, 1.0, 1, [](double x, double) { return x * x; });
  auto bs = boundary_flux(sq);
  for (double v : bs.values()) EXPECT_NEAR(v, 0.0, 1e-13);

  auto q = fill(3.0, 12, 1.0, 2, [](double x, double t) { return 1 - 2 * t * x + 0.7 * x * x; });
  auto b = boundary_flux(q);
  for (int j = 0; j <= 2; ++j) EXPECT_NEAR(b[j], -2 * q.time().instant(j), 1e-12);

  auto right = boundary_flux_right(q);
  for (int j = 0; j <= 2; ++j) EXPECT_NEAR(right[j], -2 * q.time().instant(j) + 4.2, 1e-12);
}

TEST(BoundaryFlux, NeedsThreeCells) {
  auto tr = fill(1.0, 2, 1.0, 1, [](double x, double) { return x; });
  EXPECT_THROW(boundary_flux(tr), std::invalid_argument);
}

TEST(BoundaryValue, LeftColumn) {
  auto tr = fill(1.0, 4, 2.0, 4, [](double x, double t) { return t + x; });
  auto v = boundary_value(tr);
  for (int j = 0; j <= 4; ++j) EXPECT_EQ(v[j], tr.time().instant(j));
}

TEST(L2Misfit, Examples) {
  TimeGrid g(5.0, 50);
  auto one = sample_time([](double) { return 1.0; }, g);
  auto zero = BoundaryTrace::zeros(g);
  EXPECT_EQ(l2_time_misfit(one, one), 0.0);
  EXPECT_NEAR(l2_time_misfit(one, zero), 5.0, 1e-13);

  TimeGrid gp(std::numbers::pi, 1000);
  auto s = sample_time([](double t) { return std::sin(t); }, gp);
  EXPECT_NEAR(l2_time_misfit(s, BoundaryTrace::zeros(gp)), std::numbers::pi / 2, 1e-5);
}

TEST(L2Misfit, NonNegativeAndPositiveOnDifference) {
  TimeGrid g(1.0, 10);
  std::vector<double> v(11, 0.0);
  v[4] = 1e-3;
  EXPECT_GT(l2_time_misfit(BoundaryTrace(g, v), BoundaryTrace::zeros(g)), 0.0);
}

TEST(L2Misfit, SecondOrderInTime) {
  // int_0^2 e^{2t} dt for a = e^t, b = 0.
  const double exact = (std::exp(4.0) - 1.0) / 2.0;
  double prev = 0.0;
  for (int m : {10, 20, 40, 80}) {
    TimeGrid g(2.0, m);
    double err = std::abs(
        l2_time_misfit(sample_time([](double t) { return std::exp(t); }, g), BoundaryTrace::zeros(g)) -
        exact);
    if (prev > 0.0) {
      EXPECT_GE(std::log2(prev / err), 1.9);
    }
    prev = err;
  }
}

TEST(L2Misfit, GridMismatch) {
  EXPECT_THROW(l2_time_misfit(BoundaryTrace::zeros(TimeGrid(1.0, 4)),
                              BoundaryTrace::zeros(TimeGrid(1.0, 5))),
               std::invalid_argument);
}

}  // namespace
}  // namespace domlen
