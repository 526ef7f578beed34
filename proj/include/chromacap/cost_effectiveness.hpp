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

// Cost-effectiveness of moving from a palette P1 of N1 colors to a larger palette
// P2 of N2 colors:
//
//   density gain      dD = log2(N2) / log2(N1) - 1
//   accuracy cost     A  = 1 - min_pairwise_diff / 765
//   accuracy delta    dA = max(0, A(P2) - A(P1))      (or supplied by the caller)
//   CE                    = (dD - dA) / (1 + dA)
//
// CE > 0 means the extra colors pay for the lost separation.

#ifndef CHROMACAP_COST_EFFECTIVENESS_HPP
#define CHROMACAP_COST_EFFECTIVENESS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "chromacap/capacity.hpp"
#include "chromacap/color.hpp"
#include "chromacap/registry.hpp"

namespace chromacap {

/// 1 - min_pairwise_diff / 765, in [0, 764/765].
inline double accuracy_requirement(const Palette& p) {
  return 1.0 - static_cast<double>(min_pairwise_diff(p)) / kMaxColorDiff;
}

inline double delta_density(long long n2, long long n1) {
  if (n1 < 2) throw DomainError("delta_density: n1 must be >= 2");
  if (n2 <= n1) throw DomainError("delta_density: n2 must exceed n1");
  return std::log2(static_cast<double>(n2)) / std::log2(static_cast<double>(n1)) - 1.0;
}

/// Accuracy cost of P2 relative to P1, clamped at zero.
inline double delta_accuracy(const Palette& p2, const Palette& p1) {
  return std::max(0.0, accuracy_requirement(p2) - accuracy_requirement(p1));
}

inline double cost_effectiveness(double dd, double da) {
  if (!(da >= 0.0)) throw DomainError("cost_effectiveness: accuracy cost must be >= 0");
  return (dd - da) / (1.0 + da);
}

enum class AccuracySource { kComputed, kSupplied };

inline std::string_view to_string(AccuracySource s) {
  return s == AccuracySource::kComputed ? "computed" : "supplied";
}

struct ComparisonRow {
  std::string p2_name;
  std::string p1_name;
  int n2 = 0;
  int n1 = 0;
  double delta_density = 0.0;
  double delta_accuracy = 0.0;
  double ce = 0.0;
  double entropy_gain_paper = 0.0;
  AccuracySource delta_accuracy_source = AccuracySource::kComputed;
};

/// Compares P2 against P1 (N2 > N1 >= 2). `supplied_da` overrides the computed
/// accuracy cost and is mandatory when either palette is sized-only.
inline ComparisonRow compare(const Palette& p2, const Palette& p1,
                             std::optional<double> supplied_da = std::nullopt) {
  if (p2.n_colors <= p1.n_colors) {
    throw DomainError("compare: '" + p2.name + "' (N=" + std::to_string(p2.n_colors) +
                      ") must be larger than '" + p1.name + "' (N=" + std::to_string(p1.n_colors) + ")");
  }
  ComparisonRow row;
  row.p2_name = p2.name;
  row.p1_name = p1.name;
  row.n2 = p2.n_colors;
  row.n1 = p1.n_colors;
  row.delta_density = delta_density(p2.n_colors, p1.n_colors);
  if (supplied_da) {
    if (!(*supplied_da >= 0.0)) throw DomainError("compare: supplied accuracy cost must be >= 0");
    row.delta_accuracy = *supplied_da;
    row.delta_accuracy_source = AccuracySource::kSupplied;
  } else {
    if (p2.sized_only() || p1.sized_only()) {
      throw MissingAccuracy("compare: '" + (p2.sized_only() ? p2.name : p1.name) +
                            "' is sized-only; supply the accuracy cost explicitly");
    }
    row.delta_accuracy = delta_accuracy(p2, p1);
    row.delta_accuracy_source = AccuracySource::kComputed;
  }
  row.ce = cost_effectiveness(row.delta_density, row.delta_accuracy);
  row.entropy_gain_paper = entropy_gain(row.n2, row.n1, EntropyMode::kPaper);
  return row;
}

/// Accuracy costs keyed by (p2 name, p1 name).
using SuppliedAccuracy = std::map<std::pair<std::string, std::string>, double>;

struct ComparisonMatrix {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> notes;  // skipped or failed pairs
};

/// Compares every ordered pair with N2 > N1. Rows are sorted by (n1, n2, p2_name);
/// pairs that fail are reported in `notes` instead of aborting the batch.
inline ComparisonMatrix comparison_matrix(const std::vector<Palette>& palettes,
                                          const SuppliedAccuracy& supplied = {}) {
  if (palettes.size() < 2) throw DomainError("comparison_matrix: need at least 2 palettes");
  ComparisonMatrix out;
  for (std::size_t i = 0; i < palettes.size(); ++i) {
    for (std::size_t j = 0; j < palettes.size(); ++j) {
      if (i == j) continue;
      const auto& a = palettes[i];
      const auto& b = palettes[j];
      if (a.n_colors == b.n_colors) {
        if (i < j) out.notes.push_back("skipped " + a.name + " vs " + b.name + ": equal sizes");
        continue;
      }
      if (a.n_colors < b.n_colors) continue;
      std::optional<double> da;
      if (auto it = supplied.find({a.name, b.name}); it != supplied.end()) da = it->second;
      try {
        out.rows.push_back(compare(a, b, da));
      } catch (const Error& e) {
        out.notes.push_back(a.name + " vs " + b.name + ": " + e.what());
      }
    }
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const ComparisonRow& x, const ComparisonRow& y) {
    return std::tie(x.n1, x.n2, x.p2_name) < std::tie(y.n1, y.n2, y.p2_name);
  });
  return out;
}

/// One pairing of the published HCCB comparison, with its published accuracy cost.
struct Table1Entry {
  std::string_view p2;
  std::string_view p1;
  double delta_accuracy;
};

// Row order follows the published table: the HCCB4 block, then the HCCB8 block.
inline constexpr std::array<Table1Entry, 24> kTable1 = {{
    {"HCCB4", "3c", 1.000}, {"HCCB4", "4e", 1.000}, {"6s", "HCCB4", 0.000}, {"7a", "HCCB4", 0.000},
    {"8b", "HCCB4", 0.000}, {"9d", "HCCB4", 0.000}, {"10c", "HCCB4", 0.178}, {"11c", "HCCB4", 0.188},
    {"12d", "HCCB4", 0.294}, {"13c", "HCCB4", 0.002}, {"14c", "HCCB4", 0.002}, {"15c", "HCCB4", 0.212},
    {"HCCB8", "3c", 1.000}, {"HCCB8", "4e", 1.000}, {"HCCB8", "5d", 0.332}, {"HCCB8", "6s", 0.000},
    {"HCCB8", "7a", 0.000}, {"9d", "HCCB8", 0.000}, {"10c", "HCCB8", 0.178}, {"11c", "HCCB8", 0.188},
    {"12d", "HCCB8", 0.294}, {"13c", "HCCB8", 0.002}, {"14c", "HCCB8", 0.002}, {"15c", "HCCB8", 0.212},
}};

/// Recomputes the 24 HCCB comparisons from registry sizes. The accuracy costs are
/// inputs: the palettes behind them are not public.
inline std::vector<ComparisonRow> reproduce_table1() {
  std::vector<ComparisonRow> rows;
  rows.reserve(kTable1.size());
  for (const auto& e : kTable1) {
    rows.push_back(compare(builtin_palette(e.p2), builtin_palette(e.p1), e.delta_accuracy));
  }
  return rows;
}

/// Rounds half away from zero to `decimals` places, the way tabulated values are
/// reported. Decimal ties such as 0.0745, which binary floating point stores a hair
/// below or above the tie, still round away from zero.
inline double round_reported(double x, int decimals = 3) {
  const double scale = std::pow(10.0, decimals);
  const double y = x * scale;
  return std::round(y + std::copysign(1e-9, y)) / scale;
}

}  // namespace chromacap

#endif  // CHROMACAP_COST_EFFECTIVENESS_HPP
