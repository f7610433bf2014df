#include "domlen/tridiag.hpp"

#include <stdexcept>
#include <string>

#include "domlen/error.hpp"

namespace domlen {

std::vector<double> tridiag_solve(std::span<const double> lower, std::span<const double> diag,
                                  std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0) throw std::invalid_argument("tridiag_solve: empty system");
  if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n) {
    throw std::invalid_argument("tridiag_solve: inconsistent band sizes");
  }

  std::vector<double> c(n);  // modified upper band
  std::vector<double> x(n);

  double pivot = diag[0];
  if (pivot == 0.0) throw SolverError(SolverError::Kind::ZeroPivot, "tridiag_solve: zero pivot at row 0");
  c[0] = n > 1 ? upper[0] / pivot : 0.0;
  x[0] = rhs[0] / pivot;

  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i - 1] * c[i - 1];
    if (pivot == 0.0) {
      throw SolverError(SolverError::Kind::ZeroPivot,
                        "tridiag_solve: zero pivot at row " + std::to_string(i));
    }
    c[i] = i + 1 < n ? upper[i] / pivot : 0.0;
    x[i] = (rhs[i] - lower[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

}  // namespace domlen
