#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nabla::cli {

/// A header row and string cells; numbers are formatted before insertion.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// %.17g, enough digits to round-trip any double.
[[nodiscard]] std::string format_number(double value);

void write_csv(std::ostream& out, const CsvTable& table);

/// Parses what write_csv produces (no quoting). Throws std::runtime_error on
/// ragged rows.
[[nodiscard]] CsvTable read_csv(std::istream& in);

/// Cell (row, column-by-name) as a double.
[[nodiscard]] double cell_number(const CsvTable& table, std::size_t row, const std::string& column);

}  // namespace nabla::cli
