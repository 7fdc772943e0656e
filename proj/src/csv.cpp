#include "zetalab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "zetalab/errors.hpp"

namespace zetalab::csv {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string number(long long v) { return std::to_string(v); }

void write_row(std::ostream& out, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << row[i];
  }
  out << '\n';
}

void write(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  write_row(out, header);
  for (const auto& r : rows) write_row(out, r);
}

void write_file(const std::filesystem::path& path, const Row& header, const std::vector<Row>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write(out, header, rows);
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace zetalab::csv
