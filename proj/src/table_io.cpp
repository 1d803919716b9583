#include "fdd/table_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace fdd::table_io {

namespace {

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  return std::get<std::string>(c);
}

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\r\n") != std::string::npos;
}

// split one CSV record into fields, honoring quoted sections
std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

// one logical record; quoted fields may span physical lines, and a record is
// complete once its double quotes balance out (escaped quotes come in pairs)
bool read_record(std::istream& is, std::string& record) {
  record.clear();
  std::string line;
  bool got = false;
  size_t quotes = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (got) record += '\n';
    got = true;
    record += line;
    for (char ch : line) quotes += ch == '"';
    if (quotes % 2 == 0) return true;
  }
  return got;
}

Cell parse_cell(const std::string& s) {
  if (s.empty()) return s;
  errno = 0;
  char* end = nullptr;
  const long long as_int = std::strtoll(s.c_str(), &end, 10);
  if (errno == 0 && end == s.c_str() + s.size()) return as_int;
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  errno = 0;
  const double as_double = std::strtod(s.c_str(), &end);
  if (errno == 0 && end == s.c_str() + s.size()) return as_double;
  return s;
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) return nullptr;  // JSON has no nan/inf literals
    return v;
  }
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  return std::get<std::string>(c);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& os, const Table& t) {
  for (const auto& [key, value] : t.metadata) os << "# " << key << ": " << value << '\n';
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(t.columns[i]);
  }
  os << '\n';
  for (const Row& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(cell_text(row[i]));
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json doc;
  auto& meta = doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : t.metadata) meta[key] = value;
  doc["columns"] = t.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const Row& row : t.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const Cell& c : row) jrow.push_back(cell_json(c));
    rows.push_back(std::move(jrow));
  }
  os << doc.dump(1) << '\n';
}

Table read_csv(std::istream& is) {
  Table t;
  std::string record;
  bool have_header = false;
  while (read_record(is, record)) {
    if (!have_header && record.rfind("# ", 0) == 0) {
      const std::string body = record.substr(2);
      const size_t sep = body.find(": ");
      if (sep == std::string::npos)
        t.metadata.emplace_back(body, "");
      else
        t.metadata.emplace_back(body.substr(0, sep), body.substr(sep + 2));
      continue;
    }
    if (!have_header) {
      t.columns = split_record(record);
      have_header = true;
      continue;
    }
    if (record.empty()) continue;
    const auto fields = split_record(record);
    Row row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_cell(f));
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("read_csv: missing header row");
  return t;
}

}  // namespace fdd::table_io
