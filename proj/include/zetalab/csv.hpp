#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace zetalab::csv {

using Row = std::vector<std::string>;

/// 12 significant digits, C locale.
std::string number(double v);
std::string number(long long v);

void write_row(std::ostream& out, const Row& row);
void write(std::ostream& out, const Row& header, const std::vector<Row>& rows);

/// Throws IoError if the file cannot be written.
void write_file(const std::filesystem::path& path, const Row& header, const std::vector<Row>& rows);

}  // namespace zetalab::csv
