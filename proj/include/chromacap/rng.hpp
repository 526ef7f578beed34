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

// Small fixed generators. Nothing here uses <random> distributions, whose output is
// implementation-defined; results are reproducible bit-for-bit across standard
// libraries.

#ifndef CHROMACAP_RNG_HPP
#define CHROMACAP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace chromacap {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// 64-bit linear congruential generator (Knuth's MMIX constants).
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit constexpr Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

 private:
  std::uint64_t state_;
};

/// A stream addressed by (seed, counter). Streams for different counters are
/// independent, so work items can be evaluated in any order or on any thread and
/// still see the same numbers.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t counter) noexcept
      : state_(mix64(seed ^ mix64(counter + 0x9e3779b97f4a7c15ULL))) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on [0, n), unbiased (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t n) noexcept {
    auto m = static_cast<unsigned __int128>(next()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = -n % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Standard normal pair by the Box-Muller transform.
  void normal_pair(double& z0, double& z1) noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    z0 = radius * std::cos(angle);
    z1 = radius * std::sin(angle);
  }

 private:
  std::uint64_t state_;
};

}  // namespace chromacap

#endif  // CHROMACAP_RNG_HPP
