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

// Monte-Carlo symbol error rate of a palette under additive Gaussian channel noise.
//
// Each trial t draws from its own CounterRng(seed, t): the true symbol index, then
// three standard normals for the r, g, b perturbation. The observed color is decoded
// to the nearest palette entry (L1, lowest index on ties).

#ifndef CHROMACAP_CHANNEL_HPP
#define CHROMACAP_CHANNEL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "chromacap/color.hpp"
#include "chromacap/rng.hpp"

namespace chromacap {

struct ChannelModel {
  double sigma = 0.0;  // per-channel standard deviation, in channel units
  std::uint64_t seed = 0;
  std::int64_t trials = 1;
};

struct SimResult {
  double ser = 0.0;
  std::int64_t errors = 0;
  std::int64_t trials = 0;
  double half_width_95 = 0.0;  // normal approximation

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Adds sigma * draw to each channel, rounding half away from zero and clamping.
inline Color perturb(const Color& c, double sigma, const std::array<double, 3>& draw) {
  if (!(sigma >= 0.0)) throw DomainError("perturb: sigma must be >= 0");
  const auto ch = [sigma](int v, double z) {
    const double x = std::round(static_cast<double>(v) + sigma * z);
    return static_cast<std::uint8_t>(std::clamp(x, 0.0, static_cast<double>(kChannelMax)));
  };
  return Color{ch(c.r, draw[0]), ch(c.g, draw[1]), ch(c.b, draw[2])};
}

/// Index of the palette color nearest to `observed`; ties go to the lowest index.
inline std::size_t decode_nearest(const Color& observed, const Palette& p) {
  if (p.sized_only()) throw SizedOnlyPalette(p.name);
  std::size_t best = 0;
  int best_d = color_diff(observed, p.colors[0]);
  for (std::size_t i = 1; i < p.colors.size(); ++i) {
    const int d = color_diff(observed, p.colors[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

namespace detail {

inline bool trial_fails(const Palette& p, double sigma, std::uint64_t seed, std::uint64_t trial) {
  CounterRng rng(seed, trial);
  const auto truth = static_cast<std::size_t>(rng.below(p.colors.size()));
  std::array<double, 3> z{};
  double spare = 0.0;
  rng.normal_pair(z[0], z[1]);
  rng.normal_pair(z[2], spare);
  return decode_nearest(perturb(p.colors[truth], sigma, z), p) != truth;
}

}  // namespace detail

/// Estimates the symbol error rate. `threads` only changes wall time: every trial
/// has a fixed random stream and the error count is an integer sum.
inline SimResult symbol_error_rate(const Palette& p, const ChannelModel& model, unsigned threads = 1) {
  if (p.sized_only()) throw SizedOnlyPalette(p.name);
  if (p.colors.size() < 2) throw TooFewColors(p.name);
  if (!(model.sigma >= 0.0)) throw DomainError("symbol_error_rate: sigma must be >= 0");
  if (model.trials < 1) throw DomainError("symbol_error_rate: trials must be >= 1");

  const auto n = static_cast<std::uint64_t>(model.trials);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(n, 256))));

  const auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::int64_t errs = 0;
    for (std::uint64_t t = begin; t < end; ++t) errs += detail::trial_fails(p, model.sigma, model.seed, t);
    return errs;
  };

  std::int64_t errors = 0;
  if (threads == 1) {
    errors = count_range(0, n);
  } else {
    std::vector<std::int64_t> partial(threads, 0);
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) {
      const std::uint64_t begin = n * k / threads;
      const std::uint64_t end = n * (k + 1) / threads;
      pool.emplace_back([&, k, begin, end] { partial[k] = count_range(begin, end); });
    }
    pool.clear();
    for (auto e : partial) errors += e;
  }

  SimResult r;
  r.errors = errors;
  r.trials = model.trials;
  r.ser = static_cast<double>(errors) / static_cast<double>(model.trials);
  r.half_width_95 = 1.96 * std::sqrt(r.ser * (1.0 - r.ser) / static_cast<double>(model.trials));
  return r;
}

}  // namespace chromacap

#endif  // CHROMACAP_CHANNEL_HPP
