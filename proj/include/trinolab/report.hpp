// Report serialization: JSON (sorted keys), CSV (RFC 4180 quoting) and an
// aligned text table.
#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trinolab/sweep.hpp"

namespace trinolab {

using json = nlohmann::json;

enum class Format { Json, Csv, Text };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw Error("unknown format: " + std::string(s));
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  friend bool operator==(const Table&, const Table&) = default;
};

struct Report {
  json body;
  Table table;
};

// ---- CSV -------------------------------------------------------------------

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string write_csv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(table.columns);
  for (const auto& r : table.rows) line(r);
  return out;
}

/// Inverse of write_csv; accepts LF or CRLF record ends.
inline Table read_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      record.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      cell += c;
      any = true;
    }
  }
  if (quoted) throw Error("unterminated quoted CSV field");
  if (any || !cell.empty()) {
    record.push_back(std::move(cell));
    records.push_back(std::move(record));
  }
  Table t;
  if (records.empty()) return t;
  t.columns = std::move(records.front());
  t.rows.assign(std::make_move_iterator(records.begin() + 1), std::make_move_iterator(records.end()));
  for (const auto& r : t.rows)
    if (r.size() != t.columns.size()) throw Error("CSV record width does not match header");
  return t;
}

// ---- text -------------------------------------------------------------------

inline std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline std::string write_text(const Report& report) {
  std::ostringstream out;
  if (report.body.is_object()) {
    for (const auto& [key, value] : report.body.items())
      if (!value.is_array() && !value.is_object()) out << key << ": " << scalar_text(value) << '\n';
  }
  const Table& t = report.table;
  if (t.columns.empty()) return out.str();
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    out << s << '\n';
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

inline std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      return report.body.dump(2) + "\n";
    case Format::Csv:
      // Summary-only reports become property/value pairs.
      if (report.table.columns.empty() && report.body.is_object()) {
        Table kv{{"property", "value"}, {}};
        for (const auto& [key, value] : report.body.items()) kv.rows.push_back({key, scalar_text(value)});
        return write_csv(kv);
      }
      return write_csv(report.table);
    case Format::Text:
      return write_text(report);
  }
  return {};
}

/// Writes to `path`, or to `fallback` when no path is given.
inline void report_write(const Report& report, Format format, const std::optional<std::string>& path,
                         std::ostream& fallback) {
  const std::string text = render(report, format);
  if (!path) {
    fallback << text;
    if (!fallback) throw Error("cannot write report to output stream");
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open " + *path + " for writing");
  file << text;
  file.flush();
  if (!file) throw Error("cannot write " + *path);
}

// ---- sweep rows ----------------------------------------------------------

inline const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {
      "family",       "k",           "l",           "modulus",        "gcd_ok",
      "direct_bijection", "zieve_cond1", "zieve_cond2", "g_bijection", "max_fiber_size",
      "witness_count", "lemma_case_histogram", "routes_agree", "error"};
  return cols;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json to_json(const conjlab::SweepRow& row) {
  json j;
  j["family"] = row.family;
  j["k"] = row.k;
  j["l"] = row.l;
  j["modulus"] = row.modulus;
  j["gcd_ok"] = optional_json(row.gcd_ok);
  j["direct_bijection"] = optional_json(row.direct_bijection);
  j["zieve_cond1"] = optional_json(row.zieve_cond1);
  j["zieve_cond2"] = optional_json(row.zieve_cond2);
  j["g_bijection"] = optional_json(row.g_bijection);
  j["max_fiber_size"] = optional_json(row.max_fiber_size);
  j["witness_count"] = optional_json(row.witness_count);
  j["lemma_case_histogram"] = row.error ? json(nullptr) : json(row.lemma_case_histogram);
  j["routes_agree"] = optional_json(row.routes_agree);
  j["error"] = optional_json(row.error);
  return j;
}

inline json to_json(const std::vector<conjlab::SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

inline Table sweep_table(const std::vector<conjlab::SweepRow>& rows) {
  Table t{sweep_columns(), {}};
  for (const auto& row : rows) {
    const json j = to_json(row);
    std::vector<std::string> cells;
    for (const auto& c : t.columns) {
      const json& v = j.at(c);
      cells.push_back(v.is_null() ? "" : scalar_text(v));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

inline std::vector<conjlab::SweepRow> sweep_rows_from_table(const Table& table) {
  if (table.columns != sweep_columns()) throw Error("unexpected sweep columns");
  std::vector<conjlab::SweepRow> out;
  auto opt_bool = [](const std::string& s) -> std::optional<bool> {
    if (s.empty()) return std::nullopt;
    if (s == "true") return true;
    if (s == "false") return false;
    throw Error("malformed boolean: " + s);
  };
  auto opt_size = [](const std::string& s) -> std::optional<std::size_t> {
    if (s.empty()) return std::nullopt;
    return static_cast<std::size_t>(parse_u64(s));
  };
  for (const auto& r : table.rows) {
    conjlab::SweepRow row;
    row.family = static_cast<int>(parse_u64(r[0]));
    row.k = static_cast<unsigned>(parse_u64(r[1]));
    row.l = parse_u64(r[2]);
    row.modulus = r[3];
    row.gcd_ok = opt_bool(r[4]);
    row.direct_bijection = opt_bool(r[5]);
    row.zieve_cond1 = opt_bool(r[6]);
    row.zieve_cond2 = opt_bool(r[7]);
    row.g_bijection = opt_bool(r[8]);
    row.max_fiber_size = opt_size(r[9]);
    row.witness_count = opt_size(r[10]);
    if (!r[11].empty()) row.lemma_case_histogram = json::parse(r[11]).get<std::map<std::string, std::size_t>>();
    row.routes_agree = opt_bool(r[12]);
    if (!r[13].empty()) row.error = r[13];
    out.push_back(std::move(row));
  }
  return out;
}

inline Report sweep_report(const std::vector<conjlab::SweepRow>& rows) { return {to_json(rows), sweep_table(rows)}; }

}  // namespace trinolab
