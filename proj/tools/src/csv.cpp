#include "bayesreg_cli/csv.hpp"

#include <bayesreg/error.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>

namespace bayesreg::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return cells;
}

}  // namespace

CsvTable load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file '" + path.string() + "'");

  CsvTable table;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto cells = split(view);
    if (!have_header) {
      if (cells.size() < 2) throw ParseError(line_no, 1, "header needs at least one predictor and a response");
      for (const auto c : cells) table.header.emplace_back(c);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) throw RaggedRows(line_no, table.header.size(), cells.size());
    std::vector<double> row(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string_view cell = cells[c];
      if (cell.empty()) throw RaggedRows(line_no, table.header.size(), c);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        throw NonNumericCell(line_no, c + 1, std::string(cell));
      }
      row[c] = v;
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw ValidationError("input file '" + path.string() + "' is empty");
  if (rows.empty()) throw ValidationError("input file '" + path.string() + "' has no data rows");
  if (rows.size() < 2) throw ValidationError("input file '" + path.string() + "' needs at least two data rows");

  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(table.header.size() - 1);
  table.x.resize(n, p);
  table.y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < p; ++j) table.x(i, j) = r[static_cast<std::size_t>(j)];
    table.y(i) = r.back();
  }
  return table;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }
  return std::string(buf, ptr);
}

}  // namespace bayesreg::cli
