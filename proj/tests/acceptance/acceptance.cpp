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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chromacap/chromacap.hpp"

namespace {

using namespace chromacap;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Published {
  const char* p2;
  const char* p1;
  double dd, da, ce;
};

// The published HCCB comparison, in row order.
constexpr Published kPublished[24] = {
    {"HCCB4", "3c", 0.465, 1.000, -0.268}, {"HCCB4", "4e", 0.161, 1.000, -0.420},
    {"6s", "HCCB4", 0.113, 0.000, 0.113},  {"7a", "HCCB4", 0.209, 0.000, 0.209},
    {"8b", "HCCB4", 0.292, 0.000, 0.292},  {"9d", "HCCB4", 0.365, 0.000, 0.365},
    {"10c", "HCCB4", 0.431, 0.178, 0.214}, {"11c", "HCCB4", 0.490, 0.188, 0.254},
    {"12d", "HCCB4", 0.544, 0.294, 0.193}, {"13c", "HCCB4", 0.594, 0.002, 0.591},
    {"14c", "HCCB4", 0.640, 0.002, 0.637}, {"15c", "HCCB4", 0.683, 0.212, 0.389},
    {"HCCB8", "3c", 0.893, 1.000, -0.054}, {"HCCB8", "4e", 0.500, 1.000, -0.250},
    {"HCCB8", "5d", 0.292, 0.332, -0.030}, {"HCCB8", "6s", 0.161, 0.000, 0.161},
    {"HCCB8", "7a", 0.069, 0.000, 0.069},  {"9d", "HCCB8", 0.057, 0.000, 0.057},
    {"10c", "HCCB8", 0.107, 0.178, -0.060}, {"11c", "HCCB8", 0.153, 0.188, -0.030},
    {"12d", "HCCB8", 0.195, 0.294, -0.077}, {"13c", "HCCB8", 0.233, 0.002, 0.231},
    {"14c", "HCCB8", 0.269, 0.002, 0.267}, {"15c", "HCCB8", 0.302, 0.212, 0.075},
};

// Collects the first failure message of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

int g_failed = 0;

void report(int id, const std::string& title, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  if (!c.ok()) ++g_failed;
  std::cout << (c.ok() ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title;
  if (!c.ok()) {
    std::cout << " -- " << c.failure();
  } else if (!detail.empty()) {
    std::cout << " (" << detail << ")";
  }
  std::cout << std::endl;
}

std::string num(double x, int prec = 6) {
  std::ostringstream s;
  s.precision(prec);
  s << x;
  return s.str();
}

// Plain Shannon entropy over a flat vector, written without the library helpers.
double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0) h -= x * std::log2(x);
  return h;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = "'" CHROMACAP_CLI_PATH "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string criterion1(Check& c) {
  const auto t0 = Clock::now();
  const auto rows = reproduce_table1();
  const double elapsed = seconds_since(t0);
  c.expect(rows.size() == 24, "expected 24 rows, got " + std::to_string(rows.size()));
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size() && i < 24; ++i) {
    const auto& w = kPublished[i];
    c.expect(rows[i].p2_name == w.p2 && rows[i].p1_name == w.p1, "row order differs at " + std::to_string(i));
    const double err = std::abs(rows[i].delta_density - w.dd);
    worst = std::max(worst, err);
    c.expect(err <= 5e-4, std::string(w.p2) + " vs " + w.p1 + ": dD=" + num(rows[i].delta_density) +
                              " published " + num(w.dd));
  }
  c.expect(elapsed < 1.0, "runtime " + num(elapsed) + " s");
  return "max |err|=" + num(worst, 3) + ", " + num(elapsed * 1e3, 3) + " ms";
}

std::string criterion2(Check& c) {
  const auto rows = reproduce_table1();
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size() && i < 24; ++i) {
    const auto& w = kPublished[i];
    c.expect(rows[i].delta_accuracy == w.da, "supplied dA differs at row " + std::to_string(i));
    const double err = std::abs(rows[i].ce - w.ce);
    worst = std::max(worst, err);
    c.expect(err <= 2e-3, std::string(w.p2) + " vs " + w.p1 + ": CE=" + num(rows[i].ce) + " published " + num(w.ce));
  }
  return "max |err|=" + num(worst, 3);
}

std::string criterion3(Check& c) {
  const double a = entropy_gain(10, 4, EntropyMode::kPaper);
  const double b = entropy_gain(14, 8, EntropyMode::kPaper);
  c.expect(std::abs(a - 25.219) <= 1e-3, "gain(10,4)=" + num(a, 9));
  c.expect(std::abs(b - 29.302) <= 1e-3, "gain(14,8)=" + num(b, 9));
  return "gain(10,4)=" + num(a, 8) + ", gain(14,8)=" + num(b, 8);
}

std::string criterion4(Check& c) {
  constexpr int kCases = 10000;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> ch(0, 255);
  const auto color = [&] {
    return Color{static_cast<std::uint8_t>(ch(rng)), static_cast<std::uint8_t>(ch(rng)),
                 static_cast<std::uint8_t>(ch(rng))};
  };

  // Metric axioms.
  for (int i = 0; i < kCases; ++i) {
    const Color x = color(), y = color(), z = color();
    const int dxy = color_diff(x, y);
    const int manual = std::abs(x.r - y.r) + std::abs(x.g - y.g) + std::abs(x.b - y.b);
    c.expect(dxy == manual, "color_diff disagrees with the L1 sum");
    c.expect(color_diff(x, x) == 0, "d(x,x) != 0");
    c.expect((dxy == 0) == (x == y), "identity of indiscernibles");
    c.expect(dxy == color_diff(y, x), "symmetry");
    c.expect(color_diff(x, z) <= dxy + color_diff(y, z), "triangle inequality");
    c.expect(dxy >= 0 && dxy <= 765, "range");
  }

  // CE sign law and composition identity.
  std::uniform_int_distribution<long long> size(2, 1000);
  std::uniform_real_distribution<double> acc(0.0, 1.0);
  for (int i = 0; i < kCases; ++i) {
    long long a = size(rng), b = size(rng), d = size(rng);
    while (b == a) b = size(rng);
    if (a > b) std::swap(a, b);
    const double dd = delta_density(b, a);
    const double da = acc(rng);
    const double ce = cost_effectiveness(dd, da);
    c.expect((ce > 0) == (dd > da), "CE sign law");

    std::array<long long, 3> s = {a, b, d};
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2]) continue;
    const double lhs = (1 + delta_density(s[2], s[0]));
    const double rhs = (1 + delta_density(s[2], s[1])) * (1 + delta_density(s[1], s[0]));
    c.expect(std::abs(lhs - rhs) <= 1e-12, "composition identity");
  }

  // Chain rule and conditioning, on random joint distributions.
  std::uniform_int_distribution<int> dim(1, 8);
  std::exponential_distribution<double> weight(1.0);
  std::bernoulli_distribution drop(0.2);
  for (int i = 0; i < kCases; ++i) {
    const int rows = dim(rng), cols = dim(rng);
    std::vector<double> p(static_cast<std::size_t>(rows * cols));
    double total = 0;
    for (auto& x : p) total += (x = drop(rng) ? 0.0 : weight(rng));
    if (total == 0) p[0] = total = 1;
    for (auto& x : p) x /= total;
    const auto e = joint_decomposition(JointDistribution(rows, cols, p));

    std::vector<double> pp(rows, 0.0), pc(cols, 0.0);
    for (int r = 0; r < rows; ++r)
      for (int k = 0; k < cols; ++k) {
        pp[r] += p[r * cols + k];
        pc[k] += p[r * cols + k];
      }
    c.expect(std::abs(e.h_joint - shannon(p)) <= 1e-12, "joint entropy");
    c.expect(std::abs(e.h_joint - (e.h_pattern + e.h_color_given_pattern)) <= 1e-12, "chain rule via pattern");
    c.expect(std::abs(e.h_joint - (e.h_color + e.h_pattern_given_color)) <= 1e-12, "chain rule via color");
    c.expect(std::abs(e.h_pattern - shannon(pp)) <= 1e-12, "pattern marginal");
    c.expect(e.h_color_given_pattern <= e.h_color + 1e-12, "conditioning increased entropy");
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 5.0, "runtime " + num(elapsed) + " s");
  return "5 suites x 10^4 cases, " + num(elapsed, 3) + " s";
}

std::string criterion5(Check& c) {
  for (long long n = 1; n < 1000; ++n)
    c.expect(palette_entropy(n + 1) > palette_entropy(n), "entropy not increasing at N=" + std::to_string(n));
  for (long long k : {1LL, 6LL})
    for (long long n = 2; n < 100; ++n)
      c.expect(entropy_gain(n + 1 + k, n + 1) > entropy_gain(n + k, n),
               "gain(n+" + std::to_string(k) + ", n) not increasing at n=" + std::to_string(n));
  return "";
}

std::string criterion6(Check& c) {
  struct Case {
    int n, grid, expected;
  };
  for (const Case k : {Case{2, 2, 765}, Case{2, 4, 765}, Case{3, 2, 510}, Case{3, 3, 510}, Case{4, 2, 510}}) {
    ConstructionConfig cfg;
    cfg.n = k.n;
    cfg.grid_levels = k.grid;
    const int got = construct(cfg).achieved_min_diff;
    const int opt = brute_force_optimal(k.n, k.grid).achieved_min_diff;
    const std::string tag = "(" + std::to_string(k.n) + "," + std::to_string(k.grid) + ")";
    c.expect(opt == k.expected, tag + ": brute force " + std::to_string(opt));
    c.expect(got == opt, tag + ": construct " + std::to_string(got) + " vs optimum " + std::to_string(opt));
  }

  ConstructionConfig eight;
  eight.n = 8;
  const int d8 = construct(eight).achieved_min_diff;
  c.expect(d8 >= 255, "construct(8) min diff " + std::to_string(d8));

  ConstructionConfig hundred;
  hundred.n = 100;
  const auto t0 = Clock::now();
  const auto a = construct(hundred);
  const double elapsed = seconds_since(t0);
  const auto b = construct(hundred);
  c.expect(elapsed < 60.0, "construct(100) took " + num(elapsed) + " s");
  c.expect(a.achieved_min_diff > 0, "construct(100) min diff 0");
  c.expect(a.achieved_min_diff == min_pairwise_diff(a.palette), "reported min diff disagrees with palette");
  c.expect(a.palette == b.palette, "construct(100) not deterministic");
  return "construct(8)=" + std::to_string(d8) + ", construct(100)=" + std::to_string(a.achieved_min_diff) + " in " +
         num(elapsed, 3) + " s";
}

std::string criterion7(Check& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ch(0, 255);
  std::vector<Color> random;
  while (random.size() < 24) {
    const Color x{static_cast<std::uint8_t>(ch(rng)), static_cast<std::uint8_t>(ch(rng)),
                  static_cast<std::uint8_t>(ch(rng))};
    if (std::find(random.begin(), random.end(), x) == random.end()) random.push_back(x);
  }
  const std::vector<Palette> palettes = {
      builtin_palette("bw2"), builtin_palette("corners8"), builtin_palette("tetra4"),
      make_palette("near3", {{100, 100, 100}, {101, 100, 100}, {100, 101, 100}}), make_palette("random24", random)};
  for (const auto& p : palettes) {
    const auto r = symbol_error_rate(p, ChannelModel{0.0, 11, 20000});
    c.expect(r.errors == 0 && r.ser == 0.0, p.name + ": SER at sigma 0 is " + num(r.ser));
  }

  const ChannelModel noisy{60.0, 12345, 100000};
  const auto corners = symbol_error_rate(builtin_palette("corners8"), noisy);
  const auto tetra = symbol_error_rate(builtin_palette("tetra4"), noisy);
  c.expect(corners.ser > tetra.ser, "corners8 SER not above tetra4");
  c.expect(corners.ser - corners.half_width_95 > tetra.ser + tetra.half_width_95, "95% intervals overlap");

  const auto parallel = symbol_error_rate(builtin_palette("corners8"), noisy, 4);
  c.expect(parallel == corners, "4-way result differs from 1-way");
  return "corners8 " + num(corners.ser, 4) + "+-" + num(corners.half_width_95, 2) + ", tetra4 " + num(tetra.ser, 4) +
         "+-" + num(tetra.half_width_95, 2);
}

std::string criterion8(Check& c) {
  const auto first = cli("table1");
  const auto second = cli("table1");
  c.expect(first.code == 0, "table1 exit code " + std::to_string(first.code));
  c.expect(first.out == second.out && !first.out.empty(), "table1 output not byte-stable");

  const auto lines = split(first.out, '\n');
  c.expect(lines.size() == 25, "table1 printed " + std::to_string(lines.size()) + " lines");
  if (!lines.empty()) {
    const auto header = split(lines[0], ',');
    const auto col = [&](const std::string& name) {
      return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
    };
    const std::size_t i_dd = col("delta_density_raw"), i_da = col("delta_accuracy"), i_ce = col("ce_raw");
    c.expect(i_dd < header.size() && i_ce < header.size() && i_da < header.size(), "missing table1 columns");
    for (std::size_t i = 1; i < lines.size() && i <= 24 && c.ok(); ++i) {
      const auto f = split(lines[i], ',');
      const auto& w = kPublished[i - 1];
      c.expect(f.size() == header.size(), "ragged row " + std::to_string(i));
      if (!c.ok()) break;
      c.expect(f[0] == w.p2 && f[1] == w.p1, "row " + std::to_string(i) + " labels");
      c.expect(std::abs(std::stod(f[i_dd]) - w.dd) <= 5e-4, "row " + std::to_string(i) + " dD");
      c.expect(std::abs(std::stod(f[i_da]) - w.da) <= 1e-12, "row " + std::to_string(i) + " dA");
      c.expect(std::abs(std::stod(f[i_ce]) - w.ce) <= 2e-3, "row " + std::to_string(i) + " CE");
    }
  }

  struct Invocation {
    const char* args;
    int code;
  };
  const Invocation matrix[] = {
      {"--help", 0},
      {"entropy 14 --vs 8", 0},
      {"eval bw2 corners8 HCCB8", 0},
      {"compare 13c HCCB8 --da 0.002", 0},
      {"table1 --format table", 0},
      {"simulate tetra4 --sigma 0,40 --trials 500", 0},
      {"construct 3 --grid 3 --out /dev/null", 0},
      {"", 2},
      {"bogus-command", 2},
      {"entropy 0", 2},
      {"entropy 4 --mode nats", 2},
      {"construct 1", 2},
      {"construct 4 --grid 300", 2},
      {"eval no-such-palette", 2},
      {"compare 8b HCCB8 --da 0", 2},
      {"compare 13c HCCB8", 2},
      {"simulate HCCB8", 2},
      {"table1 --format xml", 2},
      {"construct 2 --out /nonexistent-dir/p.json", 3},
  };
  for (const auto& m : matrix) {
    const auto r = cli(m.args);
    c.expect(r.code == m.code, std::string("'") + m.args + "' exited " + std::to_string(r.code) + ", expected " +
                                   std::to_string(m.code));
  }
  return std::to_string(std::size(matrix)) + " invocations";
}

}  // namespace

int main() {
  report(1, "table density gains within 0.0005", criterion1);
  report(2, "table cost-effectiveness within 0.002", criterion2);
  report(3, "entropy gain anchors within 0.001", criterion3);
  report(4, "metric and information property suites", criterion4);
  report(5, "entropy monotonicity", criterion5);
  report(6, "construction matches exhaustive optimum", criterion6);
  report(7, "channel simulation validation", criterion7);
  report(8, "CLI table stability and exit codes", criterion8);
  std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criteria failed") << std::endl;
  return g_failed == 0 ? 0 : 1;
}
