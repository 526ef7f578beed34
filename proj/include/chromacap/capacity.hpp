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

// Information capacity of color alphabets. All logarithms are base 2.
//
// Two forms of the per-symbol entropy of an N-color equiprobable palette exist:
//
//   EntropyMode::kPaper    H = N log2 N   (the capacity measure used for palette
//                                          comparisons and the HCCB table)
//   EntropyMode::kShannon  H = log2 N     (uniform-source Shannon entropy)
//
// kPaper is the default wherever published capacity figures are reproduced.

#ifndef CHROMACAP_CAPACITY_HPP
#define CHROMACAP_CAPACITY_HPP

#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chromacap/color.hpp"
#include "chromacap/error.hpp"

namespace chromacap {

enum class EntropyMode { kPaper, kShannon };

inline constexpr double kProbabilityTolerance = 1e-9;

/// Alphabet made of every (color, pattern) combination.
struct AlphabetSpec {
  int n_colors = 1;
  int n_patterns = 1;
};

/// Information revealed by an event of probability p: log2(1/p).
inline double self_information(double p) {
  if (!(p > 0.0) || p > 1.0) throw DomainError("self_information: p must lie in (0, 1]");
  return -std::log2(p);
}

inline double palette_entropy(long long n, EntropyMode mode = EntropyMode::kPaper) {
  if (n < 1) throw DomainError("palette_entropy: n must be >= 1");
  const double nn = static_cast<double>(n);
  return mode == EntropyMode::kPaper ? nn * std::log2(nn) : std::log2(nn);
}

namespace detail {

inline void check_alphabet(const AlphabetSpec& s) {
  if (s.n_colors < 1 || s.n_patterns < 1) {
    throw DomainError("alphabet needs at least one color and one pattern");
  }
}

}  // namespace detail

/// Entropy of the joint color x pattern alphabet: (Nc Np) log2(Nc Np).
inline double joint_alphabet_entropy(const AlphabetSpec& s) {
  detail::check_alphabet(s);
  return palette_entropy(static_cast<long long>(s.n_colors) * s.n_patterns, EntropyMode::kPaper);
}

/// Product form (Nc log2 Nc) * (Np log2 Np) for palettes and pattern albums with
/// differing distributions. Units are bits^2/symbol; this is not additive and must
/// not be confused with joint_alphabet_entropy().
inline double product_entropy(const AlphabetSpec& s) {
  detail::check_alphabet(s);
  return palette_entropy(s.n_colors, EntropyMode::kPaper) *
         palette_entropy(s.n_patterns, EntropyMode::kPaper);
}

/// Entropy gained by enlarging a palette from n1 to n2 colors.
inline double entropy_gain(long long n2, long long n1, EntropyMode mode = EntropyMode::kPaper) {
  if (n1 < 1) throw DomainError("entropy_gain: n1 must be >= 1");
  if (n2 <= n1) throw DomainError("entropy_gain: n2 must exceed n1");
  return palette_entropy(n2, mode) - palette_entropy(n1, mode);
}

/// A probability vector; entries non-negative, summing to 1 within 1e-9.
class Distribution {
 public:
  explicit Distribution(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw DomainError("distribution: empty");
    double sum = 0.0;
    for (double x : p_) {
      if (!(x >= 0.0)) throw DomainError("distribution: negative or NaN entry");
      sum += x;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      throw DomainError("distribution: entries sum to " + std::to_string(sum));
    }
  }

  static Distribution uniform(std::size_t n) { return Distribution(std::vector<double>(n, 1.0 / n)); }

  std::span<const double> probabilities() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }

 private:
  std::vector<double> p_;
};

namespace detail {

// -sum p log2 p with 0 log 0 = 0. Input need not be normalized.
inline double entropy_bits(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace detail

inline double distribution_entropy(const Distribution& d) { return detail::entropy_bits(d.probabilities()); }

/// Joint probabilities indexed (pattern, color), stored row-major.
class JointDistribution {
 public:
  JointDistribution(std::size_t n_patterns, std::size_t n_colors, std::vector<double> p)
      : rows_(n_patterns), cols_(n_colors), p_(std::move(p)) {
    if (rows_ == 0 || cols_ == 0) throw DomainError("joint distribution: empty");
    if (p_.size() != rows_ * cols_) throw DomainError("joint distribution: shape mismatch");
    double sum = 0.0;
    for (double x : p_) {
      if (!(x >= 0.0)) throw DomainError("joint distribution: negative or NaN entry");
      sum += x;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      throw DomainError("joint distribution: entries sum to " + std::to_string(sum));
    }
  }

  std::size_t n_patterns() const noexcept { return rows_; }
  std::size_t n_colors() const noexcept { return cols_; }
  double operator()(std::size_t pattern, std::size_t color) const { return p_[pattern * cols_ + color]; }
  std::span<const double> probabilities() const noexcept { return p_; }

  std::vector<double> pattern_marginal() const {
    std::vector<double> m(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m[i] += (*this)(i, j);
    return m;
  }

  std::vector<double> color_marginal() const {
    std::vector<double> m(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m[j] += (*this)(i, j);
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> p_;
};

/// Entropies of a (pattern, color) joint event.
///
/// The conditional entropies are evaluated from the conditional distributions
/// themselves, sum_p P(p) H(c | p), not as a difference of joint and marginal, so
/// `h_joint == h_pattern + h_color_given_pattern` is a genuine check.
struct JointEntropies {
  double h_pattern = 0.0;
  double h_color_given_pattern = 0.0;
  double h_joint = 0.0;
  double h_color = 0.0;
  double h_pattern_given_color = 0.0;
};

inline JointEntropies joint_decomposition(const JointDistribution& j) {
  const auto pm = j.pattern_marginal();
  const auto cm = j.color_marginal();

  JointEntropies out;
  out.h_pattern = detail::entropy_bits(pm);
  out.h_color = detail::entropy_bits(cm);
  out.h_joint = detail::entropy_bits(j.probabilities());

  std::vector<double> cond;
  for (std::size_t p = 0; p < j.n_patterns(); ++p) {
    if (pm[p] <= 0.0) continue;
    cond.assign(j.n_colors(), 0.0);
    for (std::size_t c = 0; c < j.n_colors(); ++c) cond[c] = j(p, c) / pm[p];
    out.h_color_given_pattern += pm[p] * detail::entropy_bits(cond);
  }
  for (std::size_t c = 0; c < j.n_colors(); ++c) {
    if (cm[c] <= 0.0) continue;
    cond.assign(j.n_patterns(), 0.0);
    for (std::size_t p = 0; p < j.n_patterns(); ++p) cond[p] = j(p, c) / cm[c];
    out.h_pattern_given_color += cm[c] * detail::entropy_bits(cond);
  }
  return out;
}

/// Per-palette capacity summary. Distance fields are empty for sized-only palettes.
struct CapacityReport {
  std::string palette_name;
  int n_colors = 0;
  std::optional<int> min_diff;
  std::optional<double> accuracy_requirement;
  double entropy_paper = 0.0;
  double entropy_shannon = 0.0;
};

inline CapacityReport capacity_report(const Palette& p) {
  CapacityReport r;
  r.palette_name = p.name;
  r.n_colors = p.n_colors;
  r.entropy_paper = palette_entropy(p.n_colors, EntropyMode::kPaper);
  r.entropy_shannon = palette_entropy(p.n_colors, EntropyMode::kShannon);
  if (!p.sized_only() && p.colors.size() >= 2) {
    r.min_diff = min_pairwise_diff(p);
    r.accuracy_requirement = 1.0 - static_cast<double>(*r.min_diff) / kMaxColorDiff;
  }
  return r;
}

}  // namespace chromacap

#endif  // CHROMACAP_CAPACITY_HPP
