#pragma once

#include <vector>

#include "domlen/grid.hpp"

namespace domlen {

/// Exact Burgers solution on (0, length) with u(0,t) = u(length,t) = 0,
/// obtained from the Neumann heat solution phi = offset + e^{-rate t} cos(k pi x / length)
/// through u = -2 phi_x / phi. Requires |offset| > 1 so phi never vanishes.
class ColeHopfSolution {
 public:
  ColeHopfSolution(double length, int mode, double offset);

  double length() const noexcept { return length_; }
  int mode() const noexcept { return mode_; }
  double offset() const noexcept { return offset_; }
  double wavenumber() const noexcept { return wavenumber_; }
  /// k^2 pi^2 / length^2.
  double decay_rate() const noexcept { return wavenumber_ * wavenumber_; }

  /// Heat potential phi(x, t).
  double potential(double x, double t) const;

 private:
  double length_;
  int mode_;
  double offset_;
  double wavenumber_;  // k pi / length
};

double cole_hopf_u(const ColeHopfSolution& s, double x, double t);

/// u_x(0, t) = 2 (k pi / length)^2 e^{-rate t} / (e^{-rate t} + offset).
double cole_hopf_flux0(const ColeHopfSolution& s, double t);

/// Two interval lengths sharing the initial datum and the flux observation at x = 0.
struct CounterExamplePair {
  double short_length;  // n0 L / m0
  double long_length;   // L
  int m0;
  int n0;
  int short_mode;  // k1
  int long_mode;   // n1 = k1 m0 / n0
  double offset;

  ColeHopfSolution short_member() const { return {short_length, short_mode, offset}; }
  ColeHopfSolution long_member() const { return {long_length, long_mode, offset}; }
};

/// Throws std::invalid_argument unless m0 > n0 >= 1, n0 divides k1 m0 and |a| > 1.
CounterExamplePair build_counterexample(double long_length, int m0, int n0, int k1, double a);

/// Truncated cosine expansion of the Neumann heat solution on (0, length).
class NeumannHeatSolution {
 public:
  NeumannHeatSolution(double length, std::vector<double> coefficients);

  double length() const noexcept { return length_; }
  int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }

  static double eigenvalue(int n, double length);
  static double eigenfunction(int n, double length, double x);

  double value(double x, double t) const;
  double flux(double x, double t) const;

 private:
  double length_;
  std::vector<double> coefficients_;
};

/// Coefficients (phi0, e_n) for n = 0..order by trapezoidal quadrature of the
/// sampled profile. The profile must have at least 4*order nodes.
NeumannHeatSolution neumann_heat_solve(const SpatialProfile& phi0, int order);

/// phi0(x) = exp(-1/2 int_0^x u0), cumulative trapezoid then exponentiation.
SpatialProfile cole_hopf_forward(const SpatialProfile& u0);

/// u = -2 phi_x / phi with central differences inside and one-sided second
/// order differences at the ends.
SpatialProfile cole_hopf_inverse(const SpatialProfile& phi);

}  // namespace domlen
