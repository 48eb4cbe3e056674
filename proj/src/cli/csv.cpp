#include "nabla/cli/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nabla::cli {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out << ',';
        out << cells[i];
    }
    out << '\n';
}

}  // namespace

std::string format_number(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void write_csv(std::ostream& out, const CsvTable& table) {
    write_row(out, table.header);
    for (const auto& row : table.rows) write_row(out, row);
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    table.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells = split(line);
        if (cells.size() != table.header.size()) {
            throw std::runtime_error("csv: row " + std::to_string(table.rows.size() + 1) +
                                     " has " + std::to_string(cells.size()) + " cells");
        }
        table.rows.push_back(std::move(cells));
    }
    return table;
}

double cell_number(const CsvTable& table, std::size_t row, const std::string& column) {
    const auto it = std::find(table.header.begin(), table.header.end(), column);
    if (it == table.header.end()) throw std::runtime_error("csv: no column " + column);
    const std::string& cell = table.rows.at(row)[static_cast<std::size_t>(it - table.header.begin())];
    // strtod rather than stod: subnormal values set ERANGE but are exact.
    char* end = nullptr;
    const double value = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw std::runtime_error("csv: bad number '" + cell + "'");
    }
    return value;
}

}  // namespace nabla::cli
