#include "covosc/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace covosc {

namespace {

double parse_double(std::string_view text, std::string_view what)
{
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::size_t parse_count(std::string_view text)
{
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("malformed grid count: '" + std::string(text) + "'");
  }
  return value;
}

bool needs_quotes(std::string_view text)
{
  return text.find_first_of(",\"\n\r") != std::string_view::npos;
}

std::string csv_field(std::string_view text)
{
  if (!needs_quotes(text)) {
    return std::string(text);
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

} // namespace

Format parse_format(std::string_view text)
{
  if (text == "csv") {
    return Format::csv;
  }
  if (text == "json") {
    return Format::json;
  }
  throw UsageError("unsupported format '" + std::string(text) + "' (expected csv or json)");
}

GridSpec parse_grid_axis(std::string_view text)
{
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    throw UsageError("grid axis must look like lo:hi:count, got '" + std::string(text) + "'");
  }
  GridSpec grid{parse_double(text.substr(0, first), "grid bound"),
                parse_double(text.substr(first + 1, second - first - 1), "grid bound"),
                parse_count(text.substr(second + 1))};
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return grid;
}

std::pair<GridSpec, GridSpec> parse_grid(std::string_view text)
{
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw UsageError("grid must look like lo:hi:count,lo:hi:count, got '" + std::string(text) + "'");
  }
  return {parse_grid_axis(text.substr(0, comma)), parse_grid_axis(text.substr(comma + 1))};
}

OutputDocument::OutputDocument(std::string command, std::vector<std::string> column_names)
    : columns(std::move(column_names))
{
  meta["command"] = std::move(command);
  meta["version"] = std::string(tool_version);
}

void OutputDocument::add_row(std::vector<Cell> row)
{
  if (row.size() != columns.size()) {
    throw std::invalid_argument("row width does not match the column count");
  }
  for (const Cell& cell : row) {
    if (const double* value = std::get_if<double>(&cell); value && !std::isfinite(*value)) {
      throw std::invalid_argument("non-finite value in output row");
    }
  }
  rows.push_back(std::move(row));
}

std::string format_number(double value)
{
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_csv(const OutputDocument& doc, std::ostream& out)
{
  out << "# meta " << doc.meta.dump() << '\n';
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(doc.columns[i]);
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out << ',';
      }
      std::visit(
          [&out](const auto& cell) {
            using T = std::decay_t<decltype(cell)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_number(cell);
            } else if constexpr (std::is_same_v<T, long long>) {
              out << cell;
            } else {
              out << csv_field(cell);
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

void write_json(const OutputDocument& doc, std::ostream& out)
{
  nlohmann::ordered_json root;
  root["meta"] = doc.meta;
  root["data"]["columns"] = doc.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    auto json_row = nlohmann::ordered_json::array();
    for (const Cell& cell : row) {
      std::visit([&json_row](const auto& value) { json_row.push_back(value); }, cell);
    }
    rows.push_back(std::move(json_row));
  }
  root["data"]["rows"] = std::move(rows);
  out << root.dump(2) << '\n';
}

void write_document(const OutputDocument& doc, Format format, std::ostream& out)
{
  if (format == Format::csv) {
    write_csv(doc, out);
  } else {
    write_json(doc, out);
  }
}

} // namespace covosc
