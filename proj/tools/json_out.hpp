#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pmetrics/types.hpp"

namespace pmetrics::cli {

// Minimal JSON emission. Every float is written with 17 significant digits so
// values round-trip exactly and repeated runs are byte-identical; the vendored
// JSON library prints shortest representations instead, which breaks the
// 17-digit contract.

inline std::string json_num(double value) {
  if (!std::isfinite(value)) return "null";  // JSON has no inf/nan tokens
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

inline std::string json_num(Index value) { return std::to_string(value); }

inline std::string json_bool(bool value) { return value ? "true" : "false"; }

inline std::string json_str(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

inline std::string json_vec(const Vector& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += json_num(v(i));
  }
  out += ']';
  return out;
}

/// Indices shifted to 1-based, matching the mathematical convention used in
/// reports.
inline std::string json_indices_1based(const std::vector<Index>& indices) {
  std::string out = "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i] + 1);
  }
  out += ']';
  return out;
}

/// Ordered key-value assembler for one-line JSON records.
class JsonObject {
 public:
  JsonObject& field(const std::string& key, const std::string& raw_value) {
    if (!body_.empty()) body_ += ',';
    body_ += json_str(key) + ":" + raw_value;
    return *this;
  }

  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

}  // namespace pmetrics::cli
