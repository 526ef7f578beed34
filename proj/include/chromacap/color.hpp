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

#ifndef CHROMACAP_COLOR_HPP
#define CHROMACAP_COLOR_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "chromacap/error.hpp"

namespace chromacap {

/// A point of the 8-bit RGB cube.
struct Color {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  // Lexicographic on (r, g, b); every tiebreak in the library relies on this order.
  friend constexpr auto operator<=>(const Color&, const Color&) = default;
};

inline constexpr int kChannelMax = 255;

/// Largest possible color difference: the L1 length of the cube diagonal.
inline constexpr int kMaxColorDiff = 3 * kChannelMax;

/// City-block (L1) distance between two colors, in [0, 765].
constexpr int color_diff(const Color& a, const Color& b) noexcept {
  const auto d = [](int x, int y) { return x > y ? x - y : y - x; };
  return d(a.r, b.r) + d(a.g, b.g) + d(a.b, b.b);
}

/// A named, ordered color set. `colors` is empty for a sized-only palette, which
/// knows its size N but not its colors.
///
/// Palette is a plain value: it can hold data that violates its invariants so that
/// validate_palette() has something to report. Use make_palette() or
/// make_sized_palette() to get a checked instance.
struct Palette {
  std::string name;
  std::vector<Color> colors;
  int n_colors = 0;

  bool sized_only() const noexcept { return colors.empty(); }

  friend bool operator==(const Palette&, const Palette&) = default;
};

struct Violation {
  enum class Kind { kDuplicate, kLengthMismatch, kBadSize };

  Kind kind;
  std::string message;
};

/// Reports every invariant violation; an empty result means the palette is valid.
inline std::vector<Violation> validate_palette(const Palette& p) {
  std::vector<Violation> out;
  if (p.n_colors < 1) {
    out.push_back({Violation::Kind::kBadSize,
                   "n_colors must be >= 1, got " + std::to_string(p.n_colors)});
  }
  if (!p.colors.empty() && static_cast<int>(p.colors.size()) != p.n_colors) {
    out.push_back({Violation::Kind::kLengthMismatch,
                   "length mismatch: " + std::to_string(p.colors.size()) +
                       " colors but n_colors=" + std::to_string(p.n_colors)});
  }
  for (std::size_t i = 0; i < p.colors.size(); ++i) {
    for (std::size_t j = i + 1; j < p.colors.size(); ++j) {
      if (p.colors[i] == p.colors[j]) {
        out.push_back({Violation::Kind::kDuplicate,
                       "duplicate at indices " + std::to_string(i) + "," + std::to_string(j)});
      }
    }
  }
  return out;
}

namespace detail {

inline std::string join_violations(const std::vector<Violation>& v) {
  std::string msg;
  for (const auto& x : v) {
    if (!msg.empty()) msg += "; ";
    msg += x.message;
  }
  return msg;
}

}  // namespace detail

/// Builds an explicit palette, throwing InvalidPalette on duplicates or an empty list.
inline Palette make_palette(std::string name, std::vector<Color> colors) {
  Palette p{std::move(name), std::move(colors), 0};
  p.n_colors = static_cast<int>(p.colors.size());
  if (p.colors.empty()) throw InvalidPalette("palette '" + p.name + "' has no colors");
  if (auto v = validate_palette(p); !v.empty()) {
    throw InvalidPalette("palette '" + p.name + "': " + detail::join_violations(v));
  }
  return p;
}

inline Palette make_sized_palette(std::string name, int n_colors) {
  if (n_colors < 1) {
    throw InvalidPalette("palette '" + name + "': n_colors must be >= 1");
  }
  return Palette{std::move(name), {}, n_colors};
}

/// Smallest color_diff over all unordered pairs.
inline int min_pairwise_diff(const Palette& p) {
  if (p.sized_only()) throw SizedOnlyPalette(p.name);
  if (p.colors.size() < 2) throw TooFewColors(p.name);
  int best = std::numeric_limits<int>::max();
  const auto& c = p.colors;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const int d = color_diff(c[i], c[j]);
      if (d < best) best = d;
    }
  }
  return best;
}

}  // namespace chromacap

#endif  // CHROMACAP_COLOR_HPP
