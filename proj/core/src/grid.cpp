#include "domlen/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace domlen {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::domain_error(std::string(what) + ": non-finite entry at index " +
                              std::to_string(i));
    }
  }
}

}  // namespace

SpatialGrid::SpatialGrid(double length, int cells)
    : length_(length), cells_(cells), spacing_(length / cells) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("SpatialGrid: length must be positive and finite");
  }
  if (cells < 1) throw std::invalid_argument("SpatialGrid: cell count must be positive");
}

double SpatialGrid::node(int i) const noexcept {
  if (i == cells_) return length_;
  return static_cast<double>(i) * length_ / static_cast<double>(cells_);
}

TimeGrid::TimeGrid(double horizon, int steps)
    : horizon_(horizon), steps_(steps), step_(horizon / steps) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw std::invalid_argument("TimeGrid: horizon must be positive and finite");
  }
  if (steps < 1) throw std::invalid_argument("TimeGrid: step count must be positive");
}

double TimeGrid::instant(int j) const noexcept {
  if (j == steps_) return horizon_;
  return static_cast<double>(j) * horizon_ / static_cast<double>(steps_);
}

BoundaryTrace::BoundaryTrace(TimeGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(grid_.instants())) {
    throw std::invalid_argument("BoundaryTrace: length does not match the time grid");
  }
  require_finite(values_, "BoundaryTrace");
}

BoundaryTrace BoundaryTrace::zeros(TimeGrid grid) {
  return BoundaryTrace(grid, std::vector<double>(static_cast<std::size_t>(grid.instants()), 0.0));
}

SpatialProfile::SpatialProfile(SpatialGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(grid_.nodes())) {
    throw std::invalid_argument("SpatialProfile: length does not match the spatial grid");
  }
  require_finite(values_, "SpatialProfile");
}

Trajectory::Trajectory(SpatialGrid space, TimeGrid time)
    : space_(space),
      time_(time),
      data_(static_cast<std::size_t>(space.nodes()) * static_cast<std::size_t>(time.instants()),
            0.0) {}

std::span<const double> Trajectory::row(int j) const {
  return std::span<const double>(data_).subspan(index(j, 0),
                                                static_cast<std::size_t>(space_.nodes()));
}

std::span<double> Trajectory::row(int j) {
  return std::span<double>(data_).subspan(index(j, 0), static_cast<std::size_t>(space_.nodes()));
}

BoundaryTrace Trajectory::column(int i) const {
  if (i < 0 || i > space_.cells()) throw std::out_of_range("Trajectory::column");
  std::vector<double> values(static_cast<std::size_t>(time_.instants()));
  for (int j = 0; j < time_.instants(); ++j) values[static_cast<std::size_t>(j)] = at(j, i);
  return BoundaryTrace(time_, std::move(values));
}

BoundaryTrace sample_time(const TimeFunction& f, const TimeGrid& grid) {
  std::vector<double> values(static_cast<std::size_t>(grid.instants()));
  for (int j = 0; j < grid.instants(); ++j) {
    const double v = f(grid.instant(j));
    if (!std::isfinite(v)) {
      throw std::domain_error("sample_time: non-finite value at t = " +
                              std::to_string(grid.instant(j)));
    }
    values[static_cast<std::size_t>(j)] = v;
  }
  return BoundaryTrace(grid, std::move(values));
}

SpatialProfile sample_space(const SpaceFunction& f, const SpatialGrid& grid) {
  std::vector<double> values(static_cast<std::size_t>(grid.nodes()));
  for (int i = 0; i < grid.nodes(); ++i) {
    const double v = f(grid.node(i));
    if (!std::isfinite(v)) {
      throw std::domain_error("sample_space: non-finite value at x = " +
                              std::to_string(grid.node(i)));
    }
    values[static_cast<std::size_t>(i)] = v;
  }
  return SpatialProfile(grid, std::move(values));
}

}  // namespace domlen
