#pragma once

#include "covosc/quadrature.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace covosc {

inline constexpr std::string_view tool_version = "0.1.0";

/// Bad command-line input; the CLI maps it to exit status 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { csv, json };

Format parse_format(std::string_view text);

/// "lo:hi:count"
GridSpec parse_grid_axis(std::string_view text);

/// "lo:hi:count,lo:hi:count"
std::pair<GridSpec, GridSpec> parse_grid(std::string_view text);

using Cell = std::variant<double, long long, std::string>;

/// Columnar result of one CLI command.
struct OutputDocument {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  OutputDocument(std::string command, std::vector<std::string> column_names);

  /// Appends a row; throws std::invalid_argument on a width mismatch or a
  /// non-finite number.
  void add_row(std::vector<Cell> row);
};

/// `# meta <json>` line, header row, then rows; floats at 17 significant digits.
void write_csv(const OutputDocument& doc, std::ostream& out);

/// {"meta": {...}, "data": {"columns": [...], "rows": [[...]]}}
void write_json(const OutputDocument& doc, std::ostream& out);

void write_document(const OutputDocument& doc, Format format, std::ostream& out);

/// %.17g rendering used by the CSV writer.
std::string format_number(double value);

} // namespace covosc
