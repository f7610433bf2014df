#include "domlen/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace domlen {

namespace {

void write_row(std::ofstream& out, const CsvRow& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << row[i];
  }
  out << '\n';
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const CsvRow& header,
               const std::vector<CsvRow>& rows) {
  auto out = open_for_writing(path);
  write_row(out, header);
  for (const auto& row : rows) write_row(out, row);
  finish(out, path);
}

void write_plotdata(const std::filesystem::path& path, const std::vector<PlotSeries>& series) {
  if (series.empty()) throw std::invalid_argument("write_plotdata: no series");
  const std::size_t n = series.front().values.size();
  CsvRow header;
  for (const auto& s : series) {
    if (s.values.size() != n) throw std::invalid_argument("write_plotdata: series lengths differ");
    header.push_back(s.name);
  }
  std::vector<CsvRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].reserve(series.size());
    for (const auto& s : series) rows[i].push_back(format_number(s.values[i]));
  }
  write_csv(path, header, rows);
}

void write_trajectory(const std::filesystem::path& path, const Trajectory& traj) {
  auto out = open_for_writing(path);
  const int nodes = traj.space().nodes();
  out << 't';
  for (int i = 0; i < nodes; ++i) out << ',' << format_number(traj.space().node(i));
  out << '\n';
  for (int j = 0; j < traj.time().instants(); ++j) {
    out << format_number(traj.time().instant(j));
    for (double v : traj.row(j)) out << ',' << format_number(v);
    out << '\n';
  }
  finish(out, path);
}

}  // namespace domlen
