/*
 * Copyright 2026 The chromacap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Row output shared by the CLI: CSV, aligned text and JSON lines. Numbers always
// use a decimal point.

#ifndef CHROMACAP_REPORT_HPP
#define CHROMACAP_REPORT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "chromacap/capacity.hpp"
#include "chromacap/channel.hpp"
#include "chromacap/cost_effectiveness.hpp"

namespace chromacap {

enum class OutputFormat { kCsv, kTable, kJsonLines };

/// Fixed-point with `decimals` places; never prints "-0.000".
inline std::string format_fixed(double x, int decimals = 6) {
  std::string s = fmt::format("{:.{}f}", x, decimals);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

/// Value rounded half away from zero to 3 decimals, the published-table presentation.
inline std::string format_reported(double x) { return format_fixed(round_reported(x, 3), 3); }

/// Six decimals with trailing zeros removed, keeping one: 24.0, 29.302969.
inline std::string format_compact(double x) {
  std::string s = format_fixed(x, 6);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.push_back('0');
  return s;
}

struct Cell {
  std::string text;
  bool numeric = false;  // unquoted in JSON output
};

inline Cell text_cell(std::string s) { return {std::move(s), false}; }
inline Cell number_cell(std::string s) { return {std::move(s), true}; }

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string render(const Table& t, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::kCsv: {
      const auto line = [&](const auto& cells, auto text_of) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) out += ',';
          out += detail::csv_escape(text_of(cells[i]));
        }
        out += '\n';
      };
      line(t.header, [](const std::string& s) { return s; });
      for (const auto& r : t.rows) line(r, [](const Cell& c) { return c.text; });
      break;
    }
    case OutputFormat::kTable: {
      std::vector<std::size_t> width(t.header.size());
      for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
      for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].text.size());
      const auto pad = [&](const std::string& s, std::size_t i, bool right) {
        const std::string fill(width[i] - s.size(), ' ');
        out += right ? fill + s : s + fill;
      };
      for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += "  ";
        pad(t.header[i], i, false);
      }
      out += '\n';
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (i) out += "  ";
          pad(r[i].text, i, r[i].numeric);
        }
        out += '\n';
      }
      break;
    }
    case OutputFormat::kJsonLines: {
      for (const auto& r : t.rows) {
        out += '{';
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (i) out += ',';
          out += nlohmann::json(t.header[i]).dump() + ':';
          out += r[i].numeric ? r[i].text : nlohmann::json(r[i].text).dump();
        }
        out += "}\n";
      }
      break;
    }
  }
  return out;
}

/// Comparison rows: the 3-decimal reported values first, then the raw values.
inline Table comparison_table(const std::vector<ComparisonRow>& rows) {
  Table t;
  t.header = {"p2",  "p1",        "n2",                "n1",
              "delta_density", "delta_accuracy", "ce", "delta_h",
              "da_source",     "delta_density_raw", "delta_accuracy_raw", "ce_raw",
              "delta_h_raw"};
  for (const auto& r : rows) {
    t.rows.push_back({text_cell(r.p2_name), text_cell(r.p1_name), number_cell(std::to_string(r.n2)),
                      number_cell(std::to_string(r.n1)), number_cell(format_reported(r.delta_density)),
                      number_cell(format_reported(r.delta_accuracy)), number_cell(format_reported(r.ce)),
                      number_cell(format_reported(r.entropy_gain_paper)),
                      text_cell(std::string(to_string(r.delta_accuracy_source))),
                      number_cell(format_fixed(r.delta_density)), number_cell(format_fixed(r.delta_accuracy)),
                      number_cell(format_fixed(r.ce)), number_cell(format_fixed(r.entropy_gain_paper))});
  }
  return t;
}

/// Capacity rows; distance columns read "-" for sized-only palettes.
inline Table capacity_table(const std::vector<CapacityReport>& reports) {
  Table t;
  t.header = {"n", "min_diff", "a_r", "h_paper", "h_shannon", "name"};
  for (const auto& r : reports) {
    t.rows.push_back({number_cell(std::to_string(r.n_colors)),
                      r.min_diff ? number_cell(std::to_string(*r.min_diff)) : text_cell("-"),
                      r.accuracy_requirement ? number_cell(format_fixed(*r.accuracy_requirement)) : text_cell("-"),
                      number_cell(format_compact(r.entropy_paper)), number_cell(format_compact(r.entropy_shannon)),
                      text_cell(r.palette_name)});
  }
  return t;
}

struct SweepPoint {
  std::string palette;
  double sigma = 0.0;
  SimResult result;
};

inline Table simulation_table(const std::vector<SweepPoint>& points) {
  Table t;
  t.header = {"palette", "sigma", "trials", "errors", "ser", "hw95"};
  for (const auto& p : points) {
    t.rows.push_back({text_cell(p.palette), number_cell(format_compact(p.sigma)),
                      number_cell(std::to_string(p.result.trials)), number_cell(std::to_string(p.result.errors)),
                      number_cell(format_fixed(p.result.ser)), number_cell(format_fixed(p.result.half_width_95))});
  }
  return t;
}

}  // namespace chromacap

#endif  // CHROMACAP_REPORT_HPP
