#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace domlen {

/// Uniform partition of [0, length] into a fixed number of cells.
///
/// The cell count is held fixed while the length varies, so the spacing
/// scales with the length and grid-dependent quantities are smooth in it.
class SpatialGrid {
 public:
  SpatialGrid(double length, int cells);

  double length() const noexcept { return length_; }
  int cells() const noexcept { return cells_; }
  int nodes() const noexcept { return cells_ + 1; }
  double spacing() const noexcept { return spacing_; }

  /// Node i in [0, cells]; the last node is the length exactly.
  double node(int i) const noexcept;

  bool operator==(const SpatialGrid&) const = default;

 private:
  double length_;
  int cells_;
  double spacing_;
};

/// Uniform partition of [0, horizon] into a fixed number of steps.
class TimeGrid {
 public:
  TimeGrid(double horizon, int steps);

  double horizon() const noexcept { return horizon_; }
  int steps() const noexcept { return steps_; }
  int instants() const noexcept { return steps_ + 1; }
  double step() const noexcept { return step_; }
  double instant(int j) const noexcept;

  bool operator==(const TimeGrid&) const = default;

 private:
  double horizon_;
  int steps_;
  double step_;
};

/// A time series aligned to a TimeGrid (boundary data or observations).
class BoundaryTrace {
 public:
  BoundaryTrace(TimeGrid grid, std::vector<double> values);

  static BoundaryTrace zeros(TimeGrid grid);

  const TimeGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  TimeGrid grid_;
  std::vector<double> values_;
};

/// A function of x sampled on the nodes of a SpatialGrid.
class SpatialProfile {
 public:
  SpatialProfile(SpatialGrid grid, std::vector<double> values);

  const SpatialGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  SpatialGrid grid_;
  std::vector<double> values_;
};

/// Space-time solution of one field; row j holds the state at instant t_j.
class Trajectory {
 public:
  Trajectory(SpatialGrid space, TimeGrid time);

  const SpatialGrid& space() const noexcept { return space_; }
  const TimeGrid& time() const noexcept { return time_; }

  std::span<const double> row(int j) const;
  std::span<double> row(int j);
  double at(int j, int i) const { return data_[index(j, i)]; }

  /// Column i as a time series.
  BoundaryTrace column(int i) const;

 private:
  std::size_t index(int j, int i) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(space_.nodes()) +
           static_cast<std::size_t>(i);
  }

  SpatialGrid space_;
  TimeGrid time_;
  std::vector<double> data_;
};

using TimeFunction = std::function<double(double)>;
using SpaceFunction = std::function<double(double)>;

/// values[j] = f(t_j); throws std::domain_error on a non-finite sample.
BoundaryTrace sample_time(const TimeFunction& f, const TimeGrid& grid);

/// values[i] = f(x_i); throws std::domain_error on a non-finite sample.
SpatialProfile sample_space(const SpaceFunction& f, const SpatialGrid& grid);

}  // namespace domlen
