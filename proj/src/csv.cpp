#include "regdepth/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace regdepth {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    std::size_t start = 0;
    while (start < cell.size() && cell[start] == ' ') ++start;
    cells.push_back(cell.substr(start));
  }
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_number(const std::string& cell, const std::string& origin, int lineno) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(cell, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != cell.size() || cell.empty()) {
    throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                ": not a number: '" + cell + "'");
  }
  return value;
}

}  // namespace

std::string format_g7(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

Dataset parse_dataset_csv(std::istream& in, const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(origin + ": empty file");
  }
  const auto header = split_row(line);
  const int p = static_cast<int>(header.size());
  if (p < 1 || header.back() != "y") {
    throw std::invalid_argument(origin + ": header must be x1,...,x{p-1},y");
  }
  for (int j = 0; j + 1 < p; ++j) {
    if (header[j] != "x" + std::to_string(j + 1)) {
      throw std::invalid_argument(origin + ": header must be x1,...,x{p-1},y");
    }
  }

  std::vector<double> carriers;
  std::vector<double> ys;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_row(line);
    if (static_cast<int>(cells.size()) != p) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                  ": expected " + std::to_string(p) + " columns");
    }
    for (int j = 0; j + 1 < p; ++j) {
      carriers.push_back(parse_number(cells[j], origin, lineno));
    }
    ys.push_back(parse_number(cells.back(), origin, lineno));
  }
  if (ys.empty()) {
    throw std::invalid_argument(origin + ": no observations");
  }
  return Dataset(std::move(carriers), std::move(ys), p);
}

Dataset load_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open dataset file: " + path);
  }
  return parse_dataset_csv(in, path);
}

void write_dataset_csv(const Dataset& d, std::ostream& out) {
  for (int j = 0; j + 1 < d.p(); ++j) out << "x" << (j + 1) << ",";
  out << "y\n";
  for (int i = 0; i < d.n(); ++i) {
    for (int j = 0; j + 1 < d.p(); ++j) out << format_g7(d.carrier(i, j)) << ",";
    out << format_g7(d.y(i)) << "\n";
  }
}

void write_residual_table_csv(const ResidualTable& table, std::ostream& out) {
  out << "i";
  if (!table.rows.empty()) {
    for (std::size_t j = 0; j < table.rows.front().x.size(); ++j) {
      out << ",x" << (j + 1);
    }
  }
  out << ",y";
  for (const auto& name : table.names) out << ",yhat_" << name;
  for (const auto& name : table.names) out << ",r_" << name;
  out << "\n";
  for (const auto& row : table.rows) {
    out << row.id;
    for (double x : row.x) out << "," << format_g7(x);
    out << "," << format_g7(row.y);
    for (double f : row.fitted) out << "," << format_g7(f);
    for (double r : row.residual) out << "," << format_g7(r);
    out << "\n";
  }
}

}  // namespace regdepth
