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

#ifndef CHROMACAP_REGISTRY_HPP
#define CHROMACAP_REGISTRY_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "chromacap/color.hpp"

namespace chromacap {

namespace detail {

// Labels of the developed palettes compared against HCCB. Only their size is
// known; the size is the label's leading integer.
inline constexpr std::array<std::string_view, 13> kDevelopedLabels = {
    "3c", "4e", "5d", "6s", "7a", "8b", "9d", "10c", "11c", "12d", "13c", "14c", "15c"};

inline int leading_integer(std::string_view label) {
  int n = 0;
  std::size_t i = 0;
  for (; i < label.size() && label[i] >= '0' && label[i] <= '9'; ++i) n = n * 10 + (label[i] - '0');
  return i == 0 ? 0 : n;
}

inline std::vector<Color> cube_corners() {
  std::vector<Color> out;
  for (int r : {0, 255})
    for (int g : {0, 255})
      for (int b : {0, 255})
        out.push_back(Color{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                            static_cast<std::uint8_t>(b)});
  return out;
}

}  // namespace detail

/// Names accepted by builtin_palette(), in a stable order.
inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out = {"bw2", "corners8", "tetra4", "HCCB4", "HCCB8"};
  for (auto l : detail::kDevelopedLabels) out.emplace_back(l);
  return out;
}

/// Looks up a named palette.
///
///   bw2       black and white
///   corners8  the 8 corners of the RGB cube, min diff 255
///   tetra4    4 corners with pairwise diff 510 (a regular tetrahedron)
///   HCCB4     sized-only, N = 5. The name follows the HCCB literature; every
///             published density ratio against it is consistent with 5 colors.
///   HCCB8     sized-only, N = 8
///   3c .. 15c developed palettes, sized-only with N = leading integer
inline Palette builtin_palette(std::string_view name) {
  if (name == "bw2") return make_palette("bw2", {Color{0, 0, 0}, Color{255, 255, 255}});
  if (name == "corners8") return make_palette("corners8", detail::cube_corners());
  if (name == "tetra4") {
    return make_palette("tetra4",
                        {Color{0, 0, 0}, Color{0, 255, 255}, Color{255, 0, 255}, Color{255, 255, 0}});
  }
  if (name == "HCCB4") return make_sized_palette("HCCB4", 5);
  if (name == "HCCB8") return make_sized_palette("HCCB8", 8);
  for (auto l : detail::kDevelopedLabels) {
    if (name == l) return make_sized_palette(std::string(l), detail::leading_integer(l));
  }
  throw UnknownPalette(std::string(name));
}

}  // namespace chromacap

#endif  // CHROMACAP_REGISTRY_HPP
