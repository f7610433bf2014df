#include "domlen/trace_ops.hpp"

#include <stdexcept>

namespace domlen {

namespace {

void require_stencil(const Trajectory& traj) {
  if (traj.space().cells() < 3) {
    throw std::invalid_argument("boundary flux needs at least 3 cells");
  }
}

}  // namespace

BoundaryTrace boundary_flux(const Trajectory& traj) {
  require_stencil(traj);
  const double two_dx = 2.0 * traj.space().spacing();
  std::vector<double> values(static_cast<std::size_t>(traj.time().instants()));
  for (int j = 0; j < traj.time().instants(); ++j) {
    const auto u = traj.row(j);
    values[static_cast<std::size_t>(j)] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / two_dx;
  }
  return BoundaryTrace(traj.time(), std::move(values));
}

BoundaryTrace boundary_flux_right(const Trajectory& traj) {
  require_stencil(traj);
  const double two_dx = 2.0 * traj.space().spacing();
  const std::size_t n = static_cast<std::size_t>(traj.space().cells());
  std::vector<double> values(static_cast<std::size_t>(traj.time().instants()));
  for (int j = 0; j < traj.time().instants(); ++j) {
    const auto u = traj.row(j);
    values[static_cast<std::size_t>(j)] = (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / two_dx;
  }
  return BoundaryTrace(traj.time(), std::move(values));
}

BoundaryTrace boundary_value(const Trajectory& traj) { return traj.column(0); }

double l2_time_misfit(const BoundaryTrace& a, const BoundaryTrace& b) {
  if (!(a.grid() == b.grid())) {
    throw std::invalid_argument("l2_time_misfit: traces live on different time grids");
  }
  const std::size_t n = a.size();
  double interior = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double d = a[j] - b[j];
    interior += d * d;
  }
  const double d0 = a[0] - b[0];
  const double dn = a[n - 1] - b[n - 1];
  return a.grid().step() * (interior + 0.5 * (d0 * d0 + dn * dn));
}

}  // namespace domlen
