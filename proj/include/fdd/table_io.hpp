#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fdd::table_io {

using Cell = std::variant<double, long long, std::string>;
using Row = std::vector<Cell>;

// Tabular run artifact: ordered metadata header, column names, data rows.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

// 17 significant digits, '.' decimal separator, "nan"/"inf"/"-inf" spelled out
std::string format_double(double v);

// RFC-4180 quoting: fields holding comma, quote, or newline get quoted,
// embedded quotes doubled
std::string csv_escape(const std::string& field);

// "# key: value" header lines in metadata order, then header row, then rows;
// '\n' terminators throughout so identical tables serialize byte-identically
void write_csv(std::ostream& os, const Table& t);

// one metadata object, the column list, and one array per row
void write_json(std::ostream& os, const Table& t);

// inverse of write_csv: numeric-looking fields come back as long long or
// double, everything else as string
Table read_csv(std::istream& is);

}  // namespace fdd::table_io
