#include "domlen/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace domlen {

using std::numbers::pi;

ColeHopfSolution::ColeHopfSolution(double length, int mode, double offset)
    : length_(length), mode_(mode), offset_(offset), wavenumber_(mode * pi / length) {
  if (!(length > 0.0)) throw std::invalid_argument("ColeHopfSolution: length must be positive");
  if (mode < 1) throw std::invalid_argument("ColeHopfSolution: mode must be a positive integer");
  if (!(std::abs(offset) > 1.0)) {
    throw std::invalid_argument("ColeHopfSolution: |offset| must exceed 1");
  }
}

double ColeHopfSolution::potential(double x, double t) const {
  return offset_ + std::exp(-decay_rate() * t) * std::cos(wavenumber_ * x);
}

double cole_hopf_u(const ColeHopfSolution& s, double x, double t) {
  const double damp = std::exp(-s.decay_rate() * t);
  const double kx = s.wavenumber() * x;
  return 2.0 * s.wavenumber() * damp * std::sin(kx) / (damp * std::cos(kx) + s.offset());
}

double cole_hopf_flux0(const ColeHopfSolution& s, double t) {
  const double damp = std::exp(-s.decay_rate() * t);
  return 2.0 * s.decay_rate() * damp / (damp + s.offset());
}

CounterExamplePair build_counterexample(double long_length, int m0, int n0, int k1, double a) {
  if (!(long_length > 0.0)) throw std::invalid_argument("build_counterexample: L must be positive");
  if (n0 < 1 || m0 <= n0) throw std::invalid_argument("build_counterexample: need m0 > n0 >= 1");
  if (k1 < 1) throw std::invalid_argument("build_counterexample: k1 must be positive");
  if ((static_cast<long long>(k1) * m0) % n0 != 0) {
    throw std::invalid_argument("build_counterexample: n0 = " + std::to_string(n0) +
                                " does not divide k1*m0 = " + std::to_string(k1 * m0));
  }
  if (!(std::abs(a) > 1.0)) throw std::invalid_argument("build_counterexample: |a| must exceed 1");
  return CounterExamplePair{
      .short_length = n0 * long_length / m0,
      .long_length = long_length,
      .m0 = m0,
      .n0 = n0,
      .short_mode = k1,
      .long_mode = k1 * m0 / n0,
      .offset = a,
  };
}

NeumannHeatSolution::NeumannHeatSolution(double length, std::vector<double> coefficients)
    : length_(length), coefficients_(std::move(coefficients)) {
  if (!(length > 0.0)) throw std::invalid_argument("NeumannHeatSolution: length must be positive");
  if (coefficients_.empty()) throw std::invalid_argument("NeumannHeatSolution: no coefficients");
}

double NeumannHeatSolution::eigenvalue(int n, double length) {
  const double k = n * pi / length;
  return k * k;
}

double NeumannHeatSolution::eigenfunction(int n, double length, double x) {
  if (n == 0) return 1.0 / std::sqrt(length);
  return std::sqrt(2.0 / length) * std::cos(n * pi * x / length);
}

double NeumannHeatSolution::value(double x, double t) const {
  double sum = 0.0;
  for (int n = 0; n <= order(); ++n) {
    sum += coefficients_[static_cast<std::size_t>(n)] * std::exp(-eigenvalue(n, length_) * t) *
           eigenfunction(n, length_, x);
  }
  return sum;
}

double NeumannHeatSolution::flux(double x, double t) const {
  double sum = 0.0;
  const double norm = std::sqrt(2.0 / length_);
  for (int n = 1; n <= order(); ++n) {
    const double k = n * pi / length_;
    sum += coefficients_[static_cast<std::size_t>(n)] * std::exp(-k * k * t) * (-norm * k) *
           std::sin(k * x);
  }
  return sum;
}

NeumannHeatSolution neumann_heat_solve(const SpatialProfile& phi0, int order) {
  if (order < 1) throw std::invalid_argument("neumann_heat_solve: order must be at least 1");
  const SpatialGrid& grid = phi0.grid();
  if (grid.nodes() < 4 * order) {
    throw std::invalid_argument("neumann_heat_solve: " + std::to_string(grid.nodes()) +
                                " nodes cannot resolve order " + std::to_string(order));
  }
  const double length = grid.length();
  const double dx = grid.spacing();
  const int last = grid.cells();
  std::vector<double> coefficients(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    double sum = 0.0;
    for (int i = 0; i <= last; ++i) {
      const double w = (i == 0 || i == last) ? 0.5 : 1.0;
      sum += w * phi0[static_cast<std::size_t>(i)] *
             NeumannHeatSolution::eigenfunction(n, length, grid.node(i));
    }
    coefficients[static_cast<std::size_t>(n)] = dx * sum;
  }
  return NeumannHeatSolution(length, std::move(coefficients));
}

SpatialProfile cole_hopf_forward(const SpatialProfile& u0) {
  const double dx = u0.grid().spacing();
  std::vector<double> phi(u0.size());
  double integral = 0.0;
  phi[0] = 1.0;
  for (std::size_t i = 1; i < u0.size(); ++i) {
    integral += 0.5 * dx * (u0[i - 1] + u0[i]);
    phi[i] = std::exp(-0.5 * integral);
  }
  return SpatialProfile(u0.grid(), std::move(phi));
}

SpatialProfile cole_hopf_inverse(const SpatialProfile& phi) {
  const std::size_t n = phi.size() - 1;
  if (n < 2) throw std::invalid_argument("cole_hopf_inverse: need at least 2 cells");
  const double two_dx = 2.0 * phi.grid().spacing();
  std::vector<double> u(n + 1);
  for (std::size_t i = 1; i < n; ++i) u[i] = -2.0 * (phi[i + 1] - phi[i - 1]) / two_dx / phi[i];
  u[0] = -2.0 * (-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) / two_dx / phi[0];
  u[n] = -2.0 * (3.0 * phi[n] - 4.0 * phi[n - 1] + phi[n - 2]) / two_dx / phi[n];
  return SpatialProfile(phi.grid(), std::move(u));
}

}  // namespace domlen
