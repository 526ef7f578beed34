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

// Maximally separated palettes: choose N colors of the RGB cube maximizing the
// minimum pairwise L1 distance (max-min dispersion).
//
// construct() runs, for each restart, a greedy farthest-point pass followed by a
// local search, and keeps the best result. All candidate positions live on a
// channel grid with L levels per channel, level i having intensity
// round(i * 255 / (L - 1)); the full cube is the grid with L = 256. Every tie is
// broken toward the lexicographically smallest (r, g, b), so results are fully
// deterministic.
//
// Local search objective, compared lexicographically:
//   1. the minimum pairwise distance (larger is better)
//   2. the number of pairs attaining it (fewer is better)
//   3. the next larger pairwise distance (larger is better)
// Two move kinds are tried. A coordinate move shifts one channel of one color by a
// step from the schedule (clamped to the cube). When no coordinate move improves at
// step 1, a relocation move takes one color of a closest pair and puts it at the
// lattice point farthest from the other colors. Only strict improvements are
// applied, so the search terminates and never lowers the minimum distance.

#ifndef CHROMACAP_CONSTRUCTION_HPP
#define CHROMACAP_CONSTRUCTION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "chromacap/color.hpp"
#include "chromacap/palette_io.hpp"
#include "chromacap/rng.hpp"

namespace chromacap {

struct ConstructionConfig {
  int n = 2;
  std::uint64_t seed = 0;
  int restarts = 8;
  std::vector<int> step_schedule = {64, 16, 4, 1};  // strictly decreasing, ends at 1
  Color start_color{0, 0, 0};
  std::optional<int> grid_levels;  // unset: full cube
  unsigned threads = 1;            // wall-time only; results do not depend on it
};

struct ConstructionResult {
  Palette palette;
  int achieved_min_diff = 0;
  int restarts_used = 0;
  int improving_moves = 0;
};

/// Intensities of an L-level channel grid.
class ChannelGrid {
 public:
  explicit ChannelGrid(int levels = 256) : levels_(levels) {
    if (levels < 2 || levels > 256) throw DomainError("grid levels must lie in [2, 256]");
    for (int i = 0; i < levels; ++i) {
      // round(i * 255 / (L - 1)), half away from zero
      value_[i] = static_cast<std::uint8_t>((2 * i * kChannelMax + (levels - 1)) / (2 * (levels - 1)));
    }
  }

  int levels() const noexcept { return levels_; }
  std::uint8_t value(int index) const noexcept { return value_[index]; }
  long long size() const noexcept { return static_cast<long long>(levels_) * levels_ * levels_; }

  /// Grid index of an exact intensity, or -1 when it is off-grid.
  int index_of(int v) const noexcept {
    for (int i = 0; i < levels_; ++i)
      if (value_[i] == v) return i;
    return -1;
  }

  /// Nearest level; ties go to the lower level.
  int nearest(int v) const noexcept {
    int best = 0;
    for (int i = 1; i < levels_; ++i) {
      const int d = std::abs(value_[i] - v);
      if (d < std::abs(value_[best] - v)) best = i;
    }
    return best;
  }

  Color color(const std::array<int, 3>& idx) const noexcept {
    return Color{value_[idx[0]], value_[idx[1]], value_[idx[2]]};
  }

 private:
  int levels_;
  std::array<std::uint8_t, 256> value_{};
};

namespace detail {

using GridPoint = std::array<int, 3>;

inline ChannelGrid grid_for(const std::optional<int>& levels) { return ChannelGrid(levels.value_or(256)); }

inline void check_config(const ConstructionConfig& cfg) {
  if (cfg.n < 2) throw DomainError("construct: n must be >= 2");
  if (cfg.restarts < 1) throw DomainError("construct: restarts must be >= 1");
  if (cfg.step_schedule.empty() || cfg.step_schedule.back() != 1) {
    throw DomainError("construct: step schedule must end with 1");
  }
  for (std::size_t i = 0; i < cfg.step_schedule.size(); ++i) {
    if (cfg.step_schedule[i] < 1) throw DomainError("construct: steps must be positive");
    if (i > 0 && cfg.step_schedule[i] >= cfg.step_schedule[i - 1]) {
      throw DomainError("construct: step schedule must be strictly decreasing");
    }
  }
  if (cfg.grid_levels && (*cfg.grid_levels < 2 || *cfg.grid_levels > 256)) {
    throw DomainError("construct: grid levels must lie in [2, 256]");
  }
}

// Greedy farthest-point selection over the grid, in grid-index space.
inline std::vector<GridPoint> greedy_indices(int n, const GridPoint& start, const ChannelGrid& grid) {
  const int L = grid.levels();
  if (n > grid.size()) {
    throw DomainError("greedy_farthest: " + std::to_string(n) + " colors exceed the " +
                      std::to_string(grid.size()) + " grid points");
  }
  // Min distance from each grid point to the chosen set; 0xFFFF until the first update.
  std::vector<std::uint16_t> field(static_cast<std::size_t>(grid.size()), 0xFFFF);
  std::vector<std::uint16_t> dist_b(L);
  std::vector<GridPoint> chosen{start};
  chosen.reserve(n);

  while (static_cast<int>(chosen.size()) < n) {
    const Color c = grid.color(chosen.back());
    for (int b = 0; b < L; ++b) dist_b[b] = static_cast<std::uint16_t>(std::abs(grid.value(b) - c.b));

    std::uint16_t best = 0;
    std::size_t best_row = 0;
    for (int r = 0; r < L; ++r) {
      const int dr = std::abs(grid.value(r) - c.r);
      for (int g = 0; g < L; ++g) {
        const auto base = static_cast<std::uint16_t>(dr + std::abs(grid.value(g) - c.g));
        const std::size_t row_index = static_cast<std::size_t>(r) * L + g;
        std::uint16_t* row = field.data() + row_index * L;
        std::uint16_t row_max = 0;
        for (int b = 0; b < L; ++b) {
          const std::uint16_t d = static_cast<std::uint16_t>(base + dist_b[b]);
          const std::uint16_t v = std::min(row[b], d);
          row[b] = v;
          row_max = std::max(row_max, v);
        }
        if (row_max > best) {
          best = row_max;
          best_row = row_index;
        }
      }
    }
    const std::uint16_t* row = field.data() + best_row * L;
    int b = 0;
    while (row[b] != best) ++b;
    chosen.push_back({static_cast<int>(best_row / L), static_cast<int>(best_row % L), b});
  }
  return chosen;
}

struct Objective {
  int min_diff = 0;
  int min_count = 0;
  int next_diff = 0;

  bool better_than(const Objective& o) const noexcept {
    return std::tuple(min_diff, -min_count, next_diff) > std::tuple(o.min_diff, -o.min_count, o.next_diff);
  }
};

// Local search state: positions, pairwise distance matrix and a histogram of all
// pairwise distances, which makes the objective of a candidate move O(n).
class Dispersion {
 public:
  Dispersion(std::vector<GridPoint> pts, const ChannelGrid& grid)
      : grid_(grid), pts_(std::move(pts)), n_(pts_.size()), dist_(n_ * n_, 0), hist_(kMaxColorDiff + 2, 0) {
    for (const auto& p : pts_) colors_.push_back(grid_.color(p));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const int d = color_diff(colors_[i], colors_[j]);
        dist_[i * n_ + j] = dist_[j * n_ + i] = d;
        ++hist_[d];
      }
    }
    current_ = scan(0);
  }

  const Objective& objective() const noexcept { return current_; }
  const std::vector<GridPoint>& points() const noexcept { return pts_; }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  // Objective if point i moved to q; state is left unchanged.
  Objective evaluate(std::size_t i, const GridPoint& q) {
    const Color c = grid_.color(q);
    int lo = current_.min_diff;
    scratch_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i) continue;
      const int d = color_diff(c, colors_[j]);
      scratch_[j] = d;
      --hist_[dist_[i * n_ + j]];
      ++hist_[d];
      lo = std::min(lo, d);
    }
    const Objective o = scan(lo);
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i) continue;
      --hist_[scratch_[j]];
      ++hist_[dist_[i * n_ + j]];
    }
    return o;
  }

  void apply(std::size_t i, const GridPoint& q) {
    pts_[i] = q;
    colors_[i] = grid_.color(q);
    int lo = current_.min_diff;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i) continue;
      const int d = color_diff(colors_[i], colors_[j]);
      --hist_[dist_[i * n_ + j]];
      ++hist_[d];
      dist_[i * n_ + j] = dist_[j * n_ + i] = d;
      lo = std::min(lo, d);
    }
    current_ = scan(lo);
  }

  // True if i takes part in a pair at the minimum distance.
  bool in_closest_pair(std::size_t i) const noexcept {
    for (std::size_t j = 0; j < n_; ++j)
      if (j != i && dist_[i * n_ + j] == current_.min_diff) return true;
    return false;
  }

 private:
  // hist_ has no entries below `lo`.
  Objective scan(int lo) const noexcept {
    Objective o{kMaxColorDiff + 1, 0, kMaxColorDiff + 1};
    int d = lo;
    while (d <= kMaxColorDiff && hist_[d] == 0) ++d;
    if (d > kMaxColorDiff) return o;
    o.min_diff = d;
    o.min_count = hist_[d];
    ++d;
    while (d <= kMaxColorDiff && hist_[d] == 0) ++d;
    o.next_diff = d;
    return o;
  }

  const ChannelGrid& grid_;
  std::vector<GridPoint> pts_;
  std::vector<Color> colors_;
  std::size_t n_;
  std::vector<int> dist_;
  std::vector<int> hist_;
  std::vector<int> scratch_;
  Objective current_;
};

// Lattice of grid indices scanned by relocation moves: the whole grid when it is
// small, otherwise 17 evenly spaced levels per channel.
inline std::vector<int> relocation_levels(const ChannelGrid& grid) {
  const int L = grid.levels();
  constexpr int kLattice = 17;
  std::vector<int> out;
  if (L <= kLattice) {
    for (int i = 0; i < L; ++i) out.push_back(i);
  } else {
    for (int k = 0; k < kLattice; ++k) out.push_back((2 * k * (L - 1) + (kLattice - 1)) / (2 * (kLattice - 1)));
  }
  return out;
}

// Steepest ascent with coordinate moves at each step size, largest first.
inline int coordinate_ascent(Dispersion& s, const std::vector<int>& schedule, int levels) {
  int moves = 0;
  const std::size_t n = s.points().size();
  for (int step : schedule) {
    while (true) {
      Objective best = s.objective();
      std::optional<std::pair<std::size_t, GridPoint>> best_move;
      for (std::size_t i = 0; i < n; ++i) {
        for (int ch = 0; ch < 3; ++ch) {
          for (int dir : {-1, +1}) {
            GridPoint q = s.points()[i];
            q[ch] = std::clamp(q[ch] + dir * step, 0, levels - 1);
            if (q[ch] == s.points()[i][ch]) continue;
            const Objective o = s.evaluate(i, q);
            if (o.better_than(best)) {
              best = o;
              best_move.emplace(i, q);
            }
          }
        }
      }
      if (!best_move) break;
      s.apply(best_move->first, best_move->second);
      ++moves;
    }
  }
  return moves;
}

// Tries to relocate one color of a closest pair; returns true if a move was applied.
inline bool relocate_once(Dispersion& s, const ChannelGrid& grid, const std::vector<int>& lattice) {
  const std::size_t n = s.points().size();
  const auto& colors = s.colors();
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.in_closest_pair(i)) continue;
    int best_d = -1;
    GridPoint best_q{};
    for (int r : lattice) {
      for (int g : lattice) {
        for (int b : lattice) {
          const GridPoint q{r, g, b};
          const Color c = grid.color(q);
          int d = std::numeric_limits<int>::max();
          for (std::size_t j = 0; j < n && d > best_d; ++j) {
            if (j != i) d = std::min(d, color_diff(c, colors[j]));
          }
          if (d > best_d) {
            best_d = d;
            best_q = q;
          }
        }
      }
    }
    if (best_q != s.points()[i] && s.evaluate(i, best_q).better_than(s.objective())) {
      s.apply(i, best_q);
      return true;
    }
  }
  return false;
}

inline std::vector<GridPoint> to_grid(const Palette& p, const ChannelGrid& grid) {
  std::vector<GridPoint> out;
  out.reserve(p.colors.size());
  for (const auto& c : p.colors) {
    const GridPoint q{grid.index_of(c.r), grid.index_of(c.g), grid.index_of(c.b)};
    if (q[0] < 0 || q[1] < 0 || q[2] < 0) {
      throw DomainError("palette '" + p.name + "' has colors off the " + std::to_string(grid.levels()) +
                        "-level grid");
    }
    out.push_back(q);
  }
  return out;
}

struct Improved {
  std::vector<Color> colors;
  int moves = 0;
};

inline Improved improve(std::vector<GridPoint> pts, const ConstructionConfig& cfg, const ChannelGrid& grid) {
  Dispersion s(std::move(pts), grid);
  const auto lattice = relocation_levels(grid);
  int moves = 0;
  do {
    moves += coordinate_ascent(s, cfg.step_schedule, grid.levels());
  } while (relocate_once(s, grid, lattice) && ++moves);
  return {s.colors(), moves};
}

// Start point of restart k: restart 0 uses the configured start color, restart k > 0
// the k-th output of Lcg64(seed), whose top three bytes pick r, g and b uniformly.
inline GridPoint restart_start(const ConstructionConfig& cfg, const ChannelGrid& grid, int k) {
  if (k == 0) {
    return {grid.nearest(cfg.start_color.r), grid.nearest(cfg.start_color.g), grid.nearest(cfg.start_color.b)};
  }
  Lcg64 lcg(cfg.seed);
  std::uint64_t x = 0;
  for (int i = 0; i < k; ++i) x = lcg.next();
  const auto level = [&](int shift) {
    const auto byte = static_cast<int>((x >> shift) & 0xFF);
    return (byte * grid.levels()) >> 8;
  };
  return {level(56), level(48), level(40)};
}

}  // namespace detail

/// Greedy farthest-point palette. The first color is `start` (snapped to the grid);
/// each next color maximizes its minimum distance to those already chosen, ties
/// going to the lexicographically smallest color.
inline Palette greedy_farthest(int n, const Color& start, std::optional<int> grid_levels = std::nullopt) {
  if (n < 2) throw DomainError("greedy_farthest: n must be >= 2");
  const auto grid = detail::grid_for(grid_levels);
  const auto pts = detail::greedy_indices(n, {grid.nearest(start.r), grid.nearest(start.g), grid.nearest(start.b)}, grid);
  std::vector<Color> colors;
  for (const auto& q : pts) colors.push_back(grid.color(q));
  return make_palette("greedy" + std::to_string(n), std::move(colors));
}

/// Improves a palette by local search; the minimum pairwise distance never drops.
/// With `cfg.grid_levels` set, every color must already lie on that grid.
inline Palette local_search_improve(const Palette& p, const ConstructionConfig& cfg) {
  if (p.sized_only()) throw SizedOnlyPalette(p.name);
  if (p.colors.size() < 2) throw TooFewColors(p.name);
  auto run = cfg;
  run.n = static_cast<int>(p.colors.size());
  detail::check_config(run);
  const auto grid = detail::grid_for(cfg.grid_levels);
  auto out = p;
  out.colors = detail::improve(detail::to_grid(p, grid), run, grid).colors;
  return out;
}

namespace detail {

struct RestartOutcome {
  std::vector<Color> colors;
  int min_diff = 0;
  int moves = 0;
  std::string key;  // serialized palette, the final tiebreak
};

inline RestartOutcome run_restart(const ConstructionConfig& cfg, const ChannelGrid& grid, int k,
                                  const std::string& name) {
  auto improved = improve(greedy_indices(cfg.n, restart_start(cfg, grid, k), grid), cfg, grid);
  RestartOutcome out;
  Palette p{name, improved.colors, cfg.n};
  out.min_diff = min_pairwise_diff(p);
  out.moves = improved.moves;
  out.key = serialize_palette(p);
  out.colors = std::move(improved.colors);
  return out;
}

}  // namespace detail

/// Builds a maximally separated n-color palette: the best of `restarts` greedy runs,
/// each refined by local search. The best run has the largest minimum distance, then
/// the lexicographically smallest serialized palette. The result depends only on the
/// config, not on `threads`, and a larger `restarts` never gives a worse result.
inline ConstructionResult construct(const ConstructionConfig& cfg) {
  detail::check_config(cfg);
  const auto grid = detail::grid_for(cfg.grid_levels);
  if (cfg.n > grid.size()) {
    throw DomainError("construct: " + std::to_string(cfg.n) + " colors exceed the " +
                      std::to_string(grid.size()) + " grid points");
  }
  const std::string name = "ms" + std::to_string(cfg.n) + "-seed" + std::to_string(cfg.seed);

  std::vector<detail::RestartOutcome> runs(cfg.restarts);
  const unsigned workers = std::clamp<unsigned>(cfg.threads, 1u, static_cast<unsigned>(cfg.restarts));
  if (workers == 1) {
    for (int k = 0; k < cfg.restarts; ++k) runs[k] = detail::run_restart(cfg, grid, k, name);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int k = static_cast<int>(w); k < cfg.restarts; k += static_cast<int>(workers)) {
          runs[k] = detail::run_restart(cfg, grid, k, name);
        }
      });
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < runs.size(); ++k) {
    if (runs[k].min_diff > runs[best].min_diff ||
        (runs[k].min_diff == runs[best].min_diff && runs[k].key < runs[best].key)) {
      best = k;
    }
  }
  ConstructionResult out;
  out.palette = make_palette(name, runs[best].colors);
  out.achieved_min_diff = runs[best].min_diff;
  out.restarts_used = cfg.restarts;
  out.improving_moves = runs[best].moves;
  return out;
}

namespace detail {

// C(n, k), saturating at `cap` + 1.
inline long long binomial_capped(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1.0L;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<long long>(acc + 0.5L);
}

}  // namespace detail

inline constexpr long long kBruteForceLimit = 10'000'000;

/// Exhaustive max-min search over all n-subsets of the grid; the reference oracle
/// for construct(). Among optimal subsets the lexicographically first is returned.
/// Throws TooLarge when C(levels^3, n) exceeds 10^7.
inline ConstructionResult brute_force_optimal(int n, int grid_levels) {
  if (n < 2) throw DomainError("brute_force_optimal: n must be >= 2");
  const ChannelGrid grid(grid_levels);
  const long long m = grid.size();
  if (detail::binomial_capped(m, n, kBruteForceLimit) > kBruteForceLimit) {
    throw TooLarge("brute_force_optimal: C(" + std::to_string(m) + ", " + std::to_string(n) + ") exceeds 10^7");
  }

  std::vector<Color> pts;
  for (int r = 0; r < grid_levels; ++r)
    for (int g = 0; g < grid_levels; ++g)
      for (int b = 0; b < grid_levels; ++b) pts.push_back(grid.color({r, g, b}));

  std::vector<int> pick(n), best_pick;
  std::vector<int> running(n + 1, std::numeric_limits<int>::max());  // min over pick[0..depth)
  int best = -1;

  // Depth-first over combinations in lexicographic order; a branch whose running
  // minimum cannot beat `best` strictly is pruned.
  const auto dfs = [&](auto&& self, int depth, int from) -> void {
    if (depth == n) {
      if (running[n] > best) {
        best = running[n];
        best_pick = pick;
      }
      return;
    }
    for (int i = from; i <= static_cast<int>(m) - (n - depth); ++i) {
      int cur = running[depth];
      for (int k = 0; k < depth && cur > best; ++k) cur = std::min(cur, color_diff(pts[pick[k]], pts[i]));
      if (cur <= best) continue;
      pick[depth] = i;
      running[depth + 1] = cur;
      self(self, depth + 1, i + 1);
    }
  };
  dfs(dfs, 0, 0);

  std::vector<Color> colors;
  for (int i : best_pick) colors.push_back(pts[i]);
  ConstructionResult out;
  out.palette = make_palette("bf" + std::to_string(n) + "-g" + std::to_string(grid_levels), std::move(colors));
  out.achieved_min_diff = best;
  out.restarts_used = 1;
  return out;
}

}  // namespace chromacap

#endif  // CHROMACAP_CONSTRUCTION_HPP
