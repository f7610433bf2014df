#pragma once

#include <span>
#include <vector>

namespace domlen {

/// Thomas algorithm for a tridiagonal system.
///
/// lower[i] couples row i+1 to unknown i, upper[i] couples row i to unknown
/// i+1. Intended for the diagonally dominant systems produced by the
/// time-stepping schemes; no pivoting is performed. Throws SolverError
/// (ZeroPivot) when an elimination pivot vanishes and std::invalid_argument
/// on inconsistent sizes.
std::vector<double> tridiag_solve(std::span<const double> lower, std::span<const double> diag,
                                  std::span<const double> upper, std::span<const double> rhs);

}  // namespace domlen
