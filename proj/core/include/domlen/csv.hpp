#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "domlen/grid.hpp"

namespace domlen {

/// 9 significant digits, shortest of fixed/scientific (printf %.9g).
std::string format_number(double v);

using CsvRow = std::vector<std::string>;

/// Writes header and rows with LF line endings. Throws std::runtime_error
/// naming the path when the file cannot be written.
void write_csv(const std::filesystem::path& path, const CsvRow& header,
               const std::vector<CsvRow>& rows);

struct PlotSeries {
  std::string name;
  std::vector<double> values;
};

/// Column-per-series plot data; all series must have the same length.
void write_plotdata(const std::filesystem::path& path, const std::vector<PlotSeries>& series);

/// Header `t,<x_0>,...,<x_N>` followed by one row per instant.
void write_trajectory(const std::filesystem::path& path, const Trajectory& traj);

}  // namespace domlen
