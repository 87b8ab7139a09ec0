#pragma once

// CSV/JSON emitters for the figure-data tables. Output is byte-stable across
// runs: 12 significant digits, '.' decimal separator, '\n' row endings,
// header row always present, no timestamps. Files are written to a temp path
// and renamed into place.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aho::report {

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> meta;  // emitted in order
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

inline std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) s += ',';
    s += t.columns[i];
  }
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += format_number(row[i]);
    }
    s += '\n';
  }
  return s;
}

inline std::string json_escape(const std::string& in) {
  std::string out;
  for (const char c : in) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Hand-rolled writer so numbers carry the same fixed 12-digit formatting as
// the CSV path (non-finite values become null).
inline std::string to_json(const Table& t) {
  std::string s = "{\n  \"command\": \"" + json_escape(t.command) + "\",\n  \"meta\": {";
  for (std::size_t i = 0; i < t.meta.size(); ++i) {
    if (i) s += ',';
    s += "\n    \"" + json_escape(t.meta[i].first) + "\": \"" + json_escape(t.meta[i].second) + "\"";
  }
  s += t.meta.empty() ? "},\n" : "\n  },\n";
  s += "  \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) s += ", ";
    s += '"' + json_escape(t.columns[i]) + '"';
  }
  s += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    s += r ? ",\n    [" : "\n    [";
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
      if (i) s += ", ";
      s += std::isfinite(t.rows[r][i]) ? format_number(t.rows[r][i]) : "null";
    }
    s += ']';
  }
  s += t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return s;
}

inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("report: cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out.good()) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("report: write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ec2;
    fs::remove(tmp, ec2);
    throw std::runtime_error("report: cannot rename into " + path.string() + ": " + ec.message());
  }
}

inline bool path_writable(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp";
  std::ofstream probe(tmp, std::ios::binary | std::ios::app);
  const bool ok = static_cast<bool>(probe);
  probe.close();
  std::error_code ec;
  fs::remove(tmp, ec);
  return ok;
}

}  // namespace aho::report
