#pragma once

// Tabular output shared by every CLI command: one header row plus data rows,
// rendered as RFC 4180 CSV (LF endings) or as a JSON array with one object
// per row keyed by the header names.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace listupdate {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view name);

struct Cell {
  std::string text;
  bool numeric = false; // emitted bare in JSON
};

Cell number_cell(std::string text);
Cell number_cell(std::uint64_t value);
Cell text_cell(std::string text);

class ReportTable {
public:
  explicit ReportTable(std::vector<std::string> headers);

  // Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& headers() const noexcept { return headers_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

private:
  std::vector<std::string> headers_;
  std::vector<std::vector<Cell>> rows_;
};

void write_csv(const ReportTable& table, std::ostream& out);
void write_json(const ReportTable& table, std::ostream& out);
void write_report(const ReportTable& table, OutputFormat format, std::ostream& out);

} // namespace listupdate
