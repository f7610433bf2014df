#pragma once

#include "domlen/grid.hpp"

namespace domlen {

/// u_x(0, t_j) from the second-order one-sided stencil
/// (-3 u_0 + 4 u_1 - u_2) / (2 dx). Requires at least 3 cells.
BoundaryTrace boundary_flux(const Trajectory& traj);

/// u_x(length, t_j) from the mirrored stencil (3 u_N - 4 u_{N-1} + u_{N-2}) / (2 dx).
BoundaryTrace boundary_flux_right(const Trajectory& traj);

/// Values at the left node over time.
BoundaryTrace boundary_value(const Trajectory& traj);

/// Composite trapezoidal approximation of the integral over (0, T) of |a - b|^2.
double l2_time_misfit(const BoundaryTrace& a, const BoundaryTrace& b);

}  // namespace domlen
