#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sdf::experiments {

/// Shortest decimal text that reads back to the same double (at most 17
/// significant digits); "nan" / "inf" / "-inf" for non-finite values.
std::string format_double(double value);

/// Strict full-string double parse; throws std::invalid_argument.
double parse_double(std::string_view text);

/// Header plus rows of raw fields. Fields never contain commas, quotes or
/// newlines in the files this library writes, so no quoting is handled.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index of `name`; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

/// Writes `table` with '\n' line endings. Throws IoError naming the path.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

}  // namespace sdf::experiments
