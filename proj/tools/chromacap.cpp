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

// chromacap command-line driver.
//
// Exit codes: 0 success, 2 usage or domain error, 3 I/O error. Data goes to stdout,
// diagnostics to stderr.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "chromacap/chromacap.hpp"

namespace {

using namespace chromacap;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats = {
    {"csv", OutputFormat::kCsv}, {"table", OutputFormat::kTable}, {"json-lines", OutputFormat::kJsonLines}};

const std::map<std::string, EntropyMode> kModes = {{"paper", EntropyMode::kPaper},
                                                   {"shannon", EntropyMode::kShannon}};

// A palette argument is a file path, or failing that a built-in palette name.
Palette load_palette(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_palette_file(arg);
  try {
    return builtin_palette(arg);
  } catch (const UnknownPalette&) {
    throw ParseError("'" + arg + "' is neither a readable palette file nor a built-in palette");
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("CHROMACAP_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw DomainError(std::string("CHROMACAP_SEED is not an unsigned integer: ") + env);
  }
}

void add_format_option(CLI::App* cmd, OutputFormat& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("csv");
}

struct EntropyArgs {
  long long n = 1;
  EntropyMode mode = EntropyMode::kPaper;
  std::optional<long long> vs;
  std::optional<int> patterns;
};

void run_entropy(const EntropyArgs& a) {
  std::string out = "h=" + format_compact(palette_entropy(a.n, a.mode));
  if (a.vs) out += " delta_h=" + format_compact(entropy_gain(a.n, *a.vs, a.mode));
  if (a.patterns) {
    if (a.n > std::numeric_limits<int>::max()) throw DomainError("entropy: n too large for --patterns");
    const AlphabetSpec spec{static_cast<int>(a.n), *a.patterns};
    out += " h_joint=" + format_compact(joint_alphabet_entropy(spec));
    out += " h_product=" + format_compact(product_entropy(spec));
    out += " h_product_form=paper,non-additive,bits^2";
  }
  std::cout << out << '\n';
}

struct ConstructArgs {
  int n = 2;
  std::optional<std::uint64_t> seed;
  int restarts = 8;
  std::optional<int> grid;
  std::vector<int> start = {0, 0, 0};
  std::string out;
  unsigned threads = 1;
};

void run_construct(const ConstructArgs& a) {
  if (a.n < 2) throw DomainError("construct: n must be >= 2");
  if (a.n > 100) std::cerr << "warning: n=" << a.n << " is outside the studied range 3..100\n";
  ConstructionConfig cfg;
  cfg.n = a.n;
  cfg.seed = a.seed ? *a.seed : default_seed();
  cfg.restarts = a.restarts;
  cfg.grid_levels = a.grid;
  cfg.threads = a.threads;
  cfg.start_color = Color{static_cast<std::uint8_t>(a.start[0]), static_cast<std::uint8_t>(a.start[1]),
                          static_cast<std::uint8_t>(a.start[2])};

  const auto result = construct(cfg);
  const std::string path = a.out.empty() ? result.palette.name + ".json" : a.out;
  if (!write_palette_file(path, result.palette)) throw IoError("cannot write '" + path + "'");
  std::cout << "min_diff=" << result.achieved_min_diff
            << " a_r=" << format_fixed(accuracy_requirement(result.palette)) << " n=" << cfg.n
            << " seed=" << cfg.seed << " restarts=" << result.restarts_used
            << " improving_moves=" << result.improving_moves << " out=" << path << '\n';
}

void run_eval(const std::vector<std::string>& paths, OutputFormat format) {
  std::vector<CapacityReport> reports;
  std::vector<std::string> failures;
  for (const auto& p : paths) {
    try {
      reports.push_back(capacity_report(load_palette(p)));
    } catch (const Error& e) {
      failures.push_back(e.what());
    }
  }
  if (!failures.empty()) {
    std::string msg = "cannot evaluate " + std::to_string(failures.size()) + " palette(s):";
    for (const auto& f : failures) msg += "\n  " + f;
    throw ParseError(msg);
  }
  std::cout << render(capacity_table(reports), format);
}

void run_compare(const std::string& a2, const std::string& a1, std::optional<double> da, OutputFormat format) {
  auto p2 = load_palette(a2);
  auto p1 = load_palette(a1);
  if (p2.n_colors == p1.n_colors) {
    throw DomainError("compare: both palettes have " + std::to_string(p2.n_colors) + " colors");
  }
  if (p2.n_colors < p1.n_colors) {
    std::cerr << "note: comparing the larger palette '" << p1.name << "' against '" << p2.name << "'\n";
    std::swap(p2, p1);
  }
  std::cout << render(comparison_table({compare(p2, p1, da)}), format);
}

struct SimulateArgs {
  std::string palette;
  std::vector<double> sigmas = {0.0};
  std::int64_t trials = 100000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
};

void run_simulate(const SimulateArgs& a, OutputFormat format) {
  const auto p = load_palette(a.palette);
  if (p.sized_only()) throw SizedOnlyPalette(p.name);
  ChannelModel model;
  model.seed = a.seed ? *a.seed : default_seed();
  model.trials = a.trials;
  std::vector<SweepPoint> points;
  for (double s : a.sigmas) {
    model.sigma = s;
    points.push_back({p.name, s, symbol_error_rate(p, model, a.threads)});
  }
  std::cout << render(simulation_table(points), format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information capacity and cost-effectiveness of color palettes"};
  app.require_subcommand(1);

  OutputFormat format = OutputFormat::kCsv;

  EntropyArgs ent;
  auto* entropy = app.add_subcommand("entropy", "Per-symbol entropy of an N-color palette");
  entropy->add_option("n", ent.n, "Palette size")->required();
  entropy->add_option("--mode", ent.mode, "paper (N log2 N) or shannon (log2 N)")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->default_str("paper");
  entropy->add_option("--vs", ent.vs, "Smaller palette size N1; also prints the entropy gain");
  entropy->add_option("--patterns", ent.patterns, "Pattern count; prints joint and product forms");

  ConstructArgs con;
  auto* construct_cmd = app.add_subcommand("construct", "Build a maximally separated palette");
  construct_cmd->add_option("n", con.n, "Number of colors")->required();
  construct_cmd->add_option("--seed", con.seed, "Restart seed (default: $CHROMACAP_SEED or 0)");
  construct_cmd->add_option("--restarts", con.restarts, "Greedy restarts")->check(CLI::PositiveNumber);
  construct_cmd->add_option("--grid", con.grid, "Restrict colors to an L-level channel grid")
      ->check(CLI::Range(2, 256));
  construct_cmd->add_option("--start", con.start, "First color r,g,b")
      ->delimiter(',')
      ->expected(3)
      ->check(CLI::Range(0, 255));
  construct_cmd->add_option("--out", con.out, "Output palette file (default: ms<N>-seed<seed>.json)");
  construct_cmd->add_option("--threads", con.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> eval_paths;
  auto* eval = app.add_subcommand("eval", "Capacity report for palette files or built-in names");
  eval->add_option("palettes", eval_paths, "Palette files or built-in names")->required();
  add_format_option(eval, format);

  std::string cmp2, cmp1;
  std::optional<double> cmp_da;
  auto* compare_cmd = app.add_subcommand("compare", "Cost-effectiveness of P2 versus P1");
  compare_cmd->add_option("p2", cmp2, "Larger palette")->required();
  compare_cmd->add_option("p1", cmp1, "Smaller palette")->required();
  compare_cmd->add_option("--da", cmp_da, "Accuracy cost; required for sized-only palettes")
      ->check(CLI::NonNegativeNumber);
  add_format_option(compare_cmd, format);

  auto* table1 = app.add_subcommand("table1", "Recompute the HCCB cost-effectiveness table");
  add_format_option(table1, format);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo symbol error rate sweep");
  simulate->add_option("palette", sim.palette, "Palette file or built-in name")->required();
  simulate->add_option("--sigma", sim.sigmas, "Noise levels, comma separated")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--trials", sim.trials, "Trials per noise level")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "RNG seed (default: $CHROMACAP_SEED or 0)");
  simulate->add_option("--threads", sim.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_format_option(simulate, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*entropy) run_entropy(ent);
    if (*construct_cmd) run_construct(con);
    if (*eval) run_eval(eval_paths, format);
    if (*compare_cmd) run_compare(cmp2, cmp1, cmp_da, format);
    if (*table1) std::cout << render(comparison_table(reproduce_table1()), format);
    if (*simulate) run_simulate(sim, format);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const chromacap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
