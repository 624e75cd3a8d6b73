// Copyright 2026 The AIMQ Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything holds).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "aimq/defaults.hpp"
#include "aimq/encoding.hpp"
#include "aimq/engine.hpp"
#include "aimq/filter.hpp"
#include "aimq/ladder.hpp"
#include "aimq/power.hpp"
#include "aimq/signal.hpp"
#include "cli/commands.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using namespace aimq;

// Pinned tolerances.
constexpr double kRatioClosedFormTol = 1e-6;
constexpr double kRatioRoundedTol = 0.005;
constexpr double kSweepStep = 0.1;
constexpr double kSweepTop = 146.0;
constexpr int kRandomInputs = 10000;
constexpr double kBandMin = 0.10;
constexpr double kBandMax = 0.20;
constexpr double kSpikeFractionMax = 0.05;
constexpr double kPowerRuntimeMax = 5.0;
constexpr double kStaircaseRuntimeMax = 1.0;
constexpr double kTrackingMax = 12.0;
constexpr double kDcGainRelTol = 1e-3;
constexpr double kCrossoverRelTol = 1e-2;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CliResult {
  int code = 0;
  std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "aimq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<double> thresholds_of(const LadderConfig& c) {
  std::vector<double> out;
  for (const auto& ch : c.channels) out.push_back(ch.threshold());
  return out;
}

Outcome power_ratio_reference() {
  const IsoAmpBudget iso{120.0, 100e-9, 5.0, 100e-9, 0.6, 0.0, 0.0};
  const AimqBudget aimq{120.0, 100e-9, 0.0, 0.0};
  const double r = power_ratio(iso, aimq, true);
  const double closed = 1.0 / (10.0 + 5.0 / (0.6 * 120.0));
  const bool ok = std::abs(r - closed) <= kRatioClosedFormTol &&
                  std::abs(r - 1.0 / 10.1) <= kRatioRoundedTol;
  return {ok, fmt::format("ratio {:.9f}, closed form {:.9f}, 1/10.1 = {:.9f}",
                          r, closed, 1.0 / 10.1)};
}

Outcome conversion_table() {
  static const char* const kTable =
      "000 -> 00000000\n001 -> 00000001\n010 -> 00000010\n"
      "011 -> 00000100\n100 -> 00001000\n101 -> 00010000\n"
      "110 -> 00100000\n111 -> 01000000\n1000 -> 10000000\n";
  const auto r = run_cli({"encode", "--table", "8"});
  const bool ok = r.code == 0 && r.out == kTable;
  return {ok, ok ? "9 rows identical"
                 : fmt::format("exit {}, output:\n{}", r.code, r.out)};
}

Outcome staircase() {
  const auto start = std::chrono::steady_clock::now();
  const auto ladder = default_ladder();
  const auto points = static_cast<long>(std::lround(kSweepTop / kSweepStep));
  std::vector<double> steps;
  bool monotone = true;
  int previous = 0;
  for (long i = 0; i <= points; ++i) {
    const double v = static_cast<double>(i) * kSweepStep;
    const int level = select_level(v, ladder);
    if (level < previous) monotone = false;
    if (level > previous) steps.push_back(v);
    previous = level;
  }
  bool located = steps.size() == 8;
  for (std::size_t n = 0; located && n < steps.size(); ++n) {
    located = std::abs(steps[n] - (66.0 + 10.0 * n)) <= kSweepStep + 1e-9;
  }
  const double elapsed = seconds_since(start);
  std::string where;
  for (double s : steps) where += fmt::format(" {:.1f}", s);
  return {monotone && located && elapsed < kStaircaseRuntimeMax,
          fmt::format("{} levels at{}; monotone {}; {:.3f} s", steps.size(),
                      where, monotone ? "yes" : "no", elapsed)};
}

Outcome one_hot_exclusivity() {
  const auto ladder = default_ladder();
  const double dt = defaults::kEngineDt;
  const int hold = static_cast<int>(std::ceil(10.0 * ladder.overlap_time / dt));
  auto rng = testing::make_rng(401);
  std::uniform_real_distribution<double> volts(0.0, 160.0);
  int steady_violations = 0;
  for (int i = 0; i < kRandomInputs; ++i) {
    LadderState s = settled_state(volts(rng), ladder);
    const double v = volts(rng);
    for (int k = 0; k < hold; ++k) s = step_ladder(s, v, dt, ladder);
    if (conducting_set(s, ladder).size() > 1) ++steady_violations;
  }

  // Ramps, including the full range in a single sample, plus walks.
  int max_conductors = 0;
  const auto config = default_sim_config();
  std::vector<BusTrace> buses{ramp(0.0, 146.0, 147, 0.01),
                              ramp(146.0, 0.0, 147, 0.01),
                              ramp(60.0, 140.0, 9, 0.01),
                              ramp(0.0, 146.0, 2, 0.01)};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    buses.push_back(random_walk_bus(100.0, 1000, 0.01, seed));
  }
  for (const auto& bus : buses) {
    for (const auto& row : simulate(config, bus).rows) {
      max_conductors = std::max(max_conductors, row.conductors);
    }
  }
  return {steady_violations == 0 && max_conductors <= 2,
          fmt::format("{} of {} held inputs with >1 conductor; max {} "
                      "conductors during transitions",
                      steady_violations, kRandomInputs, max_conductors)};
}

Outcome power_band() {
  const auto start = std::chrono::steady_clock::now();
  const auto config = default_sim_config();
  const auto bus = random_walk_bus(defaults::kBusStart, defaults::kBusSteps,
                                   defaults::kSampleInterval, defaults::kSeed);
  const auto trace = simulate(config, bus);
  const auto report = summarize_power(trace);
  const double elapsed = seconds_since(start);
  const double spike_fraction =
      static_cast<double>(report.spike_rows) / static_cast<double>(trace.size());
  const bool band = report.steady_min >= kBandMin && report.steady_max <= kBandMax;
  const bool ok = band && spike_fraction < kSpikeFractionMax &&
                  elapsed < kPowerRuntimeMax;
  return {ok, fmt::format("seed {}: steady band [{:.4f}, {:.4f}] W "
                          "(bus range [{:.2f}, {:.2f}] V); spikes {:.2f}% of "
                          "rows; {:.2f} s",
                          defaults::kSeed, report.steady_min, report.steady_max,
                          *std::min_element(bus.samples.begin(), bus.samples.end()),
                          *std::max_element(bus.samples.begin(), bus.samples.end()),
                          100.0 * spike_fraction, elapsed)};
}

Outcome tracking() {
  const auto config = default_sim_config();
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto bus = random_walk_bus(defaults::kBusStart, defaults::kBusSteps,
                                     defaults::kSampleInterval, seed);
    const auto m = tracking_metrics(simulate(config, bus), config,
                                    ReconstructionMode::kThreshold);
    ok = ok && m.max_abs_error <= kTrackingMax;
    detail += fmt::format("{}seed {} max {:.2f} V", seed == 1 ? "" : "; ",
                          seed, m.max_abs_error);
  }
  return {ok, detail};
}

Outcome filter_checks() {
  const auto f = design_sallen_key({defaults::kFilterCrossoverHz,
                                    defaults::kFilterGain, defaults::kFilterQ,
                                    defaults::kEngineDt});
  const double dc = f.dc_gain();
  const double expected_fc =
      testing::sallen_key_magnitude(16.0, 1.1, 0.5, 16.0);
  const double at_fc = frequency_response(f, 16.0).magnitude;
  const auto [p1, p2] = f.poles();
  const bool ok = std::abs(dc - 1.1) <= kDcGainRelTol * 1.1 &&
                  std::abs(at_fc - expected_fc) <= kCrossoverRelTol * expected_fc &&
                  std::abs(p1) < 1.0 && std::abs(p2) < 1.0;
  return {ok, fmt::format("dc {:.9f}; |H(16 Hz)| {:.6f} vs {:.6f}; |poles| "
                          "{:.9f}, {:.9f}",
                          dc, at_fc, expected_fc, std::abs(p1), std::abs(p2))};
}

Outcome determinism() {
  const auto base = fs::temp_directory_path() / "aimq_acceptance_determinism";
  fs::remove_all(base);
  const auto a = run_cli({"simulate", "--seed", "42", "--out-dir",
                          (base / "a").string()});
  const auto b = run_cli({"simulate", "--seed", "42", "--out-dir",
                          (base / "b").string()});
  const auto ta = slurp(base / "a" / "trace.csv");
  const auto tb = slurp(base / "b" / "trace.csv");
  fs::remove_all(base);
  const bool ok = a.code == 0 && b.code == 0 && !ta.empty() && ta == tb;
  return {ok, fmt::format("exit {}/{}; {} bytes; identical {}", a.code, b.code,
                          ta.size(), ta == tb ? "yes" : "no")};
}

Outcome oracle_equivalence() {
  const auto ladder = default_ladder();
  const auto th = thresholds_of(ladder);
  auto rng = testing::make_rng(909);
  std::uniform_real_distribution<double> volts(-20.0, 180.0);
  int mismatches = 0;
  for (int i = 0; i < kRandomInputs; ++i) {
    const double v = volts(rng);
    if (select_level(v, ladder) != testing::brute_force_level(v, th)) ++mismatches;
  }
  int round_trip_failures = 0;
  for (int width : {1, 3, 8, 16}) {
    for (int level = 0; level <= width; ++level) {
      const auto word = one_hot_encode(level, width);
      if (one_hot_decode(word) != level || word.popcount() > 1) {
        ++round_trip_failures;
      }
    }
  }
  return {mismatches == 0 && round_trip_failures == 0,
          fmt::format("{} level mismatches of {}; {} round-trip failures",
                      mismatches, kRandomInputs, round_trip_failures)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "power ratio reference", power_ratio_reference},
      {2, "conversion table", conversion_table},
      {3, "staircase", staircase},
      {4, "one-hot exclusivity", one_hot_exclusivity},
      {5, "primary power band", power_band},
      {6, "tracking fidelity", tracking},
      {7, "filter design", filter_checks},
      {8, "determinism", determinism},
      {9, "oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    fmt::print("criterion {}: {} [{}] {}\n", c.id, o.pass ? "PASS" : "FAIL",
               c.name, o.detail);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed,
             criteria.size());
  std::fflush(stdout);
  return failed;
}
