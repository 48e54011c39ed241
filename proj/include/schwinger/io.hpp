#pragma once

// CSV and JSON emitters for sweep results.
//
// CSV layout: `# key=value` lines, then the header, then one row per point.
// Floats are written with 17 significant digits so that reading a file back
// and writing it again reproduces it byte for byte.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/sweep.hpp"

namespace schwinger {

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct CsvDocument {
  Metadata meta;
  std::vector<SweepRow> rows;
};

inline constexpr const char* kCsvHeader = "axis_value,beta2,alpha2,entropy_bits,c0_sq,mean_pairs,error";

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline double parse_double(std::string_view s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  detail::require(ec == std::errc() && ptr == s.data() + s.size(), Errc::invalid_argument,
                  "malformed number '" + std::string(s) + "'");
  return x;
}

/// Everything needed to regenerate a sweep, in a fixed order.
inline Metadata sweep_metadata(const SweepSpec& spec) {
  Metadata md;
  if (!spec.label.empty()) md.emplace_back("label", spec.label);
  md.emplace_back("stat", to_string(spec.stat));
  md.emplace_back("field", to_string(spec.field_kind));
  md.emplace_back("convention", to_string(spec.convention));
  md.emplace_back("axis", to_string(spec.axis));
  md.emplace_back("start", format_double(spec.start));
  md.emplace_back("stop", format_double(spec.stop));
  md.emplace_back("steps", std::to_string(spec.steps));
  md.emplace_back("scale", to_string(spec.scale));
  auto f = spec.fixed;
  for (auto a : {SweepAxis::m, SweepAxis::k_perp, SweepAxis::k_z, SweepAxis::E0, SweepAxis::tau}) {
    if (a == spec.axis) continue;
    if (a == SweepAxis::tau && spec.field_kind != FieldKind::sauter) continue;
    md.emplace_back(to_string(a), format_double(f[a]));
  }
  md.emplace_back("q", format_double(spec.fixed.q));
  if (!spec.note.empty()) md.emplace_back("note", spec.note);
  return md;
}

inline void write_csv(std::ostream& os, const CsvDocument& doc) {
  for (const auto& [k, v] : doc.meta) os << "# " << k << '=' << v << '\n';
  os << kCsvHeader << '\n';
  for (const auto& r : doc.rows) {
    os << format_double(r.axis_value) << ',' << format_double(r.beta2) << ',' << format_double(r.alpha2) << ','
       << format_double(r.entropy_bits) << ',' << format_double(r.c0_sq) << ',' << format_double(r.mean_pairs) << ','
       << r.error << '\n';
  }
}

inline CsvDocument read_csv(std::istream& is) {
  CsvDocument doc;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (!header_seen && line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      detail::require(eq != std::string::npos, Errc::invalid_argument, "comment line without key=value");
      doc.meta.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    if (!header_seen) {
      detail::require(line == kCsvHeader, Errc::invalid_argument, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    detail::require(cells.size() == 7, Errc::invalid_argument, "CSV row must have 7 cells");
    doc.rows.push_back({parse_double(cells[0]), parse_double(cells[1]), parse_double(cells[2]),
                        parse_double(cells[3]), parse_double(cells[4]), parse_double(cells[5]), cells[6]});
  }
  detail::require(header_seen, Errc::invalid_argument, "CSV header missing");
  return doc;
}

inline nlohmann::json rows_to_json(const std::vector<SweepRow>& rows) {
  const auto num = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); };
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"axis_value", num(r.axis_value)},
                   {"beta2", num(r.beta2)},
                   {"alpha2", num(r.alpha2)},
                   {"entropy_bits", num(r.entropy_bits)},
                   {"c0_sq", num(r.c0_sq)},
                   {"mean_pairs", num(r.mean_pairs)},
                   {"error", r.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.error)}});
  }
  return arr;
}

}  // namespace schwinger
