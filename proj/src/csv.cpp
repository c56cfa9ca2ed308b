#include "itrval/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "itrval/errors.hpp"

namespace itrval {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  return cells;
}

double parse_double(const std::string& cell, std::size_t row, std::size_t col,
                    const std::string& origin) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(origin + ": malformed numeric cell '" + cell + "' at row " +
                     std::to_string(row) + ", column " + std::to_string(col + 1));
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw ParseError("failed to format double");
  return std::string(buffer, ptr);
}

Dataset read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  return read_csv_stream(in, path);
}

Dataset read_csv_stream(std::istream& in, const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError(origin + ": empty file, header expected");
  const std::vector<std::string> header = split_line(line);
  if (header.size() < 3 || header[0] != "id" || header[1] != "y" || header[2] != "a") {
    throw SchemaError(origin + ": header must start with id,y,a");
  }
  const std::size_t p = header.size() - 3;
  std::vector<std::string> names(header.begin() + 3, header.end());

  std::vector<Subject> subjects;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw ParseError(origin + ": row " + std::to_string(row) + " has " +
                       std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(header.size()));
    }
    Subject s;
    s.id = cells[0];
    if (s.id.empty()) {
      throw SchemaError(origin + ": empty id at row " + std::to_string(row));
    }
    if (cells[1].empty()) {
      throw SchemaError(origin + ": missing outcome y at row " + std::to_string(row) +
                        " (rows with missing y are rejected)");
    }
    s.outcome = parse_double(cells[1], row, 1, origin);
    if (cells[2].empty()) {
      throw SchemaError(origin + ": missing arm a at row " + std::to_string(row) +
                        " (rows with missing a are rejected)");
    }
    if (cells[2] == "0") {
      s.arm = Arm::a0;
    } else if (cells[2] == "1") {
      s.arm = Arm::a1;
    } else {
      throw SchemaError(origin + ": arm value '" + cells[2] + "' at row " +
                        std::to_string(row) + " is not in {0,1}");
    }
    s.covariates.reserve(p);
    for (std::size_t j = 0; j < p; ++j) {
      const std::string& cell = cells[3 + j];
      if (cell.empty()) {
        s.covariates.emplace_back(std::nullopt);
      } else {
        s.covariates.emplace_back(parse_double(cell, row, 3 + j, origin));
      }
    }
    subjects.push_back(std::move(s));
  }
  return Dataset(std::move(subjects), std::move(names));
}

void write_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_csv_stream(data, out);
}

void write_csv_stream(const Dataset& data, std::ostream& out) {
  out << "id,y,a";
  for (const std::string& name : data.covariate_names()) out << ',' << name;
  out << '\n';
  for (const Subject& s : data.subjects()) {
    out << s.id << ',' << format_double(s.outcome) << ',' << arm_code(s.arm);
    for (const auto& cell : s.covariates) {
      out << ',';
      if (cell.has_value()) out << format_double(*cell);
    }
    out << '\n';
  }
}

}  // namespace itrval
