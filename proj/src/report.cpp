#include "listupdate/report.hpp"

#include <fmt/format.h>
#include <stdexcept>

namespace listupdate {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string json_string(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
    case '"': out += "\\\""; break;
    case '\\': out += "\\\\"; break;
    case '\n': out += "\\n"; break;
    case '\r': out += "\\r"; break;
    case '\t': out += "\\t"; break;
    default:
      if (static_cast<unsigned char>(c) < 0x20)
        out += fmt::format("\\u{:04x}", static_cast<unsigned>(c));
      else
        out += c;
    }
  }
  out += '"';
  return out;
}

} // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument(fmt::format("unknown output format '{}'", name));
}

Cell number_cell(std::string text) { return {std::move(text), true}; }
Cell number_cell(std::uint64_t value) { return {std::to_string(value), true}; }
Cell text_cell(std::string text) { return {std::move(text), false}; }

ReportTable::ReportTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}

void ReportTable::add_row(std::vector<Cell> row) {
  if (row.size() != headers_.size())
    throw std::invalid_argument(
        fmt::format("row has {} cells, header has {}", row.size(), headers_.size()));
  rows_.push_back(std::move(row));
}

void write_csv(const ReportTable& table, std::ostream& out) {
  const auto write_line = [&](const auto& fields, auto&& text_of) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_field(text_of(fields[i]));
    }
    out << '\n';
  };
  write_line(table.headers(), [](const std::string& h) -> const std::string& { return h; });
  for (const auto& row : table.rows())
    write_line(row, [](const Cell& c) -> const std::string& { return c.text; });
}

void write_json(const ReportTable& table, std::ostream& out) {
  out << '[';
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    out << (r == 0 ? "\n  {" : ",\n  {");
    const auto& row = table.rows()[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ", ";
      out << json_string(table.headers()[i]) << ": ";
      out << (row[i].numeric ? row[i].text : json_string(row[i].text));
    }
    out << '}';
  }
  out << (table.rows().empty() ? "]\n" : "\n]\n");
}

void write_report(const ReportTable& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv)
    write_csv(table, out);
  else
    write_json(table, out);
}

} // namespace listupdate
