#pragma once

// Line-oriented key/value record format shared by every fixture, scenario and
// config file:
//
//   # comment
//   key = value
//   edge = tur, aze, 0.50
//
// Keys may repeat; records keep file order. Comma-separated values are split
// into trimmed fields on demand.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cclm/error.hpp"

namespace cclm::kv {

struct Record {
  std::string key;
  std::string value;
  int line = 0;

  std::vector<std::string> fields() const;
};

struct Document {
  std::string source;  // file path or "<string>", used in error messages
  std::vector<Record> records;

  std::vector<const Record*> all(std::string_view key) const {
    std::vector<const Record*> out;
    for (const auto& r : records)
      if (r.key == key) out.push_back(&r);
    return out;
  }

  const Record* find(std::string_view key) const {
    const Record* hit = nullptr;
    for (const auto& r : records) {
      if (r.key != key) continue;
      if (hit) throw Error(where(r) + ": duplicate key '" + r.key + "'");
      hit = &r;
    }
    return hit;
  }

  const Record& require(std::string_view key) const {
    const Record* r = find(key);
    if (!r) throw Error(source + ": missing key '" + std::string(key) + "'");
    return *r;
  }

  std::string where(const Record& r) const { return source + ":" + std::to_string(r.line); }
};

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// Whitespace-separated list, empty fields dropped.
inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::vector<std::string> Record::fields() const { return split(value, ','); }

inline Document parse(std::string_view text, std::string source = "<string>") {
  Document doc;
  doc.source = std::move(source);
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(doc.source + ":" + std::to_string(lineno) + ": expected 'key = value'");
    auto key = trim(line.substr(0, eq));
    if (key.empty()) throw Error(doc.source + ":" + std::to_string(lineno) + ": empty key");
    doc.records.push_back(Record{std::string(key), std::string(trim(line.substr(eq + 1))), lineno});
  }
  return doc;
}

inline Document parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

inline double to_double(std::string_view s, const std::string& context) {
  double v = 0.0;
  const auto t = trim(s);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw Error(context + ": not a number: '" + std::string(t) + "'");
  return v;
}

inline long long to_int(std::string_view s, const std::string& context) {
  long long v = 0;
  const auto t = trim(s);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw Error(context + ": not an integer: '" + std::string(t) + "'");
  return v;
}

/// Shortest decimal that round-trips, so written fixtures reload bit-exact.
inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace cclm::kv
