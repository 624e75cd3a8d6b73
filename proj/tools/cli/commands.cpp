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

#include "commands.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <thread>
#include <ostream>
#include <vector>

#include "aimq/defaults.hpp"
#include "aimq/encoding.hpp"
#include "aimq/engine.hpp"
#include "aimq/errors.hpp"
#include "aimq/power.hpp"

namespace aimq::cli {

namespace {

namespace fs = std::filesystem;

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

struct RunResult {
  std::uint64_t seed = 0;
  PowerReport power;
  TrackingMetrics scaled;
  TrackingMetrics threshold;
  bool has_metrics = false;
  std::size_t rows = 0;
};

std::string run_report(const RunConfig& config, const RunResult& r) {
  std::string out;
  out += fmt::format("simulation report, {}\n", version_string());
  out += fmt::format("source {}  seed {}  steps {}  t_s {} s  rng {}\n",
                     config.signal.source, r.seed, config.signal.steps,
                     config.signal.t_s, WalkNoise::kName);
  out += fmt::format("engine dt {} s  rows {}\n\n", config.engine_dt, r.rows);
  out += format_power_report(r.power);
  if (r.has_metrics) {
    out += fmt::format(
        "\ntracking (threshold reconstruction)  max {:.6g} V  mean {:.6g} V  "
        "over {} rows\n",
        r.threshold.max_abs_error, r.threshold.mean_abs_error,
        r.threshold.samples_evaluated);
    out += fmt::format(
        "tracking (x{} scaled output)        max {:.6g} V  mean {:.6g} V\n",
        config.reconstruction_scale, r.scaled.max_abs_error,
        r.scaled.mean_abs_error);
  } else {
    out += "\ntracking: trace shorter than the settling window\n";
  }
  return out;
}

RunResult run_one(const RunConfig& config, const fs::path& trace_path,
                  const fs::path& report_path, const fs::path& power_path) {
  const SimConfig sim = to_sim_config(config);
  const BusTrace bus = make_bus(config);
  const SimTrace trace = simulate(sim, bus);

  RunResult r;
  r.seed = config.signal.seed;
  r.rows = trace.size();
  r.power = summarize_power(trace);
  if (trace.rows.back().t + trace.dt > sim.settling_window) {
    r.scaled = tracking_metrics(trace, sim, ReconstructionMode::kScaled);
    r.threshold = tracking_metrics(trace, sim, ReconstructionMode::kThreshold);
    r.has_metrics = true;
  }
  write_trace_csv(trace, trace_path);
  write_text(report_path, run_report(config, r));
  write_text(power_path, power_report_csv(r.power));
  return r;
}

void print_summary(std::ostream& out, const RunResult& r) {
  out << fmt::format(
      "seed {}: steady power [{:.4g}, {:.4g}] W, mean {:.4g} W, peak {:.4g} W, "
      "{} spikes",
      r.seed, r.power.steady_min, r.power.steady_max,
      r.power.mean_primary_power, r.power.peak_primary_power,
      r.power.spike_count);
  if (r.has_metrics) {
    out << fmt::format(", tracking max {:.4g} V", r.threshold.max_abs_error);
  }
  out << '\n';
}

}  // namespace

SeedRange parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw ConfigError("seed range must look like a..b");
  }
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    SeedRange range;
    range.first = std::stoull(a, &used);
    if (used != a.size()) throw ConfigError("bad seed range start");
    range.last = std::stoull(b, &used);
    if (used != b.size()) throw ConfigError("bad seed range end");
    if (range.first > range.last) {
      throw ConfigError("seed range start exceeds end");
    }
    return range;
  } catch (const std::logic_error&) {
    throw ConfigError("bad seed range '" + text + "'");
  }
}

RunConfig effective_config(const RunSpec& spec) {
  RunConfig c = spec.config_path.empty() ? default_run_config()
                                         : load_run_config(spec.config_path);
  if (spec.seed) c.signal.seed = *spec.seed;
  if (spec.steps) c.signal.steps = *spec.steps;
  if (spec.v0) c.signal.v0 = *spec.v0;
  if (spec.trace_in) {
    c.signal.source = "file";
    c.signal.trace_file = *spec.trace_in;
  }
  if (spec.v_pri) c.iso.v_pri = c.aimq.v_pri = *spec.v_pri;
  if (spec.v_sec) c.iso.v_sec = c.aimq.v_sec = *spec.v_sec;
  if (spec.i_b) c.iso.i_b = *spec.i_b;
  if (spec.v_iso) c.iso.v_iso = *spec.v_iso;
  if (spec.i_pri) c.iso.i_pri = *spec.i_pri;
  if (spec.eta) c.iso.eta = *spec.eta;
  if (spec.i_sec) c.iso.i_sec = *spec.i_sec;
  if (spec.i_zf) c.aimq.i_zf = *spec.i_zf;
  if (spec.i_out) c.aimq.i_out = *spec.i_out;
  return c;
}

int cmd_simulate(const RunSpec& spec, std::ostream& out) {
  const RunConfig config = effective_config(spec);
  if (spec.dump_config) {
    out << dump_run_config(config);
    return kExitOk;
  }
  if (config.signal.source != "file" && config.signal.steps < 1) {
    throw ConfigError("steps must be >= 1");
  }
  // Validate before touching the filesystem.
  (void)to_sim_config(config);
  ensure_dir(spec.out_dir);

  if (!spec.seeds) {
    const auto r = run_one(config, spec.out_dir / "trace.csv",
                           spec.out_dir / "report.txt",
                           spec.out_dir / "power.csv");
    print_summary(out, r);
    out << "wrote " << (spec.out_dir / "trace.csv").string() << ", "
        << (spec.out_dir / "report.txt").string() << ", "
        << (spec.out_dir / "power.csv").string() << '\n';
    return kExitOk;
  }

  // Batch mode: independent runs share nothing but the read-only config.
  // Seeds run in waves of hardware_concurrency() threads.
  const auto wave =
      static_cast<std::uint64_t>(std::max(1U, std::thread::hardware_concurrency()));
  std::uint64_t next = spec.seeds->first;
  bool done = false;
  while (!done) {
    std::vector<std::future<RunResult>> jobs;
    for (std::uint64_t i = 0; i < wave && !done; ++i, ++next) {
      RunConfig c = config;
      c.signal.seed = next;
      const auto stem = fmt::format("seed{}", next);
      jobs.push_back(std::async(std::launch::async, [c, stem, &spec] {
        return run_one(c, spec.out_dir / ("trace_" + stem + ".csv"),
                       spec.out_dir / ("report_" + stem + ".txt"),
                       spec.out_dir / ("power_" + stem + ".csv"));
      }));
      done = next == spec.seeds->last;
    }
    for (auto& job : jobs) print_summary(out, job.get());
  }
  return kExitOk;
}

int cmd_staircase(const RunSpec& spec, std::ostream& out) {
  const RunConfig config = effective_config(spec);
  if (spec.dump_config) {
    out << dump_run_config(config);
    return kExitOk;
  }
  const LadderConfig ladder = make_ladder(config.ladder);
  ensure_dir(spec.out_dir);

  // 0.1 V grid up to 10 V past the top threshold; v = i / 10 keeps grid
  // points on exact decimal thresholds.
  const double top = ladder.channels.back().threshold() + 10.0;
  const auto points = static_cast<long>(std::floor(top * 10.0 + 1e-9));
  std::string csv = "v_in,level,v_out\n";
  std::vector<double> step_at;
  int previous = 0;
  bool monotone = true;
  for (long i = 0; i <= points; ++i) {
    const double v = static_cast<double>(i) / 10.0;
    const auto state = settled_state(v, ladder);
    const int level = state.active_channel;
    if (level < previous) monotone = false;
    if (level > previous) step_at.push_back(v);
    previous = level;
    fmt::format_to(std::back_inserter(csv), "{:.9g},{},{:.9g}\n", v, level,
                   raw_output(state, ladder));
  }
  const auto path = spec.out_dir / "staircase.csv";
  write_text(path, csv);

  out << fmt::format("swept 0 to {:.1f} V in 0.1 V steps ({} points)\n", top,
                     points + 1);
  out << fmt::format("distinct nonzero levels: {}\n", step_at.size());
  std::string steps;
  for (double v : step_at) steps += fmt::format(" {:.1f}", v);
  out << "steps at (V):" << steps << '\n';
  if (step_at.size() >= 2) {
    const double lsb =
        (step_at.back() - step_at.front()) / (step_at.size() - 1);
    out << fmt::format("mean LSB spacing: {:.4g} V\n", lsb);
  }
  out << "monotone: " << (monotone ? "yes" : "no") << '\n';
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

int cmd_power_compare(const RunSpec& spec, std::ostream& out) {
  const RunConfig config = effective_config(spec);
  if (spec.dump_config) {
    out << dump_run_config(config);
    return kExitOk;
  }
  const double iso_total = iso_amp_total_power(config.iso);
  const double aimq_total = aimq_total_power(config.aimq);
  const double simplified = power_ratio(config.iso, config.aimq, true);
  const double full = power_ratio(config.iso, config.aimq, false);
  const auto inverse = [](double r) {
    return r > 0.0 ? fmt::format("1/{:.2f}", 1.0 / r) : std::string("0");
  };
  out << fmt::format("isolation-amp total power  {:.6g} W\n", iso_total);
  out << fmt::format("AIMQ total power           {:.6g} W\n", aimq_total);
  out << fmt::format("ratio (secondary neglected) {:.6f} = {}\n", simplified,
                     inverse(simplified));
  out << fmt::format("ratio (full)                {:.6f} = {}\n", full,
                     inverse(full));
  out << "assumption V_pri*I_zf >> V_sec*I_out: "
      << (secondary_negligible(config.aimq) ? "held" : "NOT held") << '\n';
  return kExitOk;
}

int cmd_encode(const RunSpec& spec, std::ostream& out) {
  if (spec.table) {
    const int width = *spec.table;
    for (int level = 0; level <= width; ++level) {
      out << binary_label(level, width) << " -> "
          << one_hot_encode(level, width).to_string() << '\n';
    }
    return kExitOk;
  }
  if (!spec.level) throw ConfigError("encode needs --level or --table");
  out << binary_label(std::max(*spec.level, 0), spec.width) << " -> "
      << one_hot_encode(*spec.level, spec.width).to_string() << '\n';
  return kExitOk;
}

std::string version_string() {
  return fmt::format("aimq {} (defaults v{}, defaults hash {})", AIMQ_VERSION,
                     defaults::kDefaultsVersion, defaults_hash());
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Behavioral simulator for the analog isolated multilevel "
               "quantizer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", [] { return version_string(); });

  RunSpec spec;
  std::string out_dir;
  std::string seeds;
  std::uint64_t seed = 0;
  int steps = 0;
  double v0 = 0.0;
  std::string trace_in;
  int level = 0;
  int table = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", spec.config_path, "key = value config file");
    sub->add_option("--out-dir", out_dir, "output directory");
    sub->add_flag("--dump-config", spec.dump_config,
                  "print the effective configuration and exit");
  };

  auto* sim = app.add_subcommand("simulate", "run the bus-tracking experiment");
  add_common(sim);
  auto* seed_opt = sim->add_option("--seed", seed, "random-walk seed");
  auto* steps_opt = sim->add_option("--steps", steps, "bus samples");
  auto* v0_opt = sim->add_option("--v0", v0, "initial bus voltage");
  auto* trace_opt =
      sim->add_option("--trace-in", trace_in, "bus trace file (t_s= format)");
  auto* seeds_opt = sim->add_option("--seeds", seeds,
                                    "batch over an inclusive seed range a..b");
  seeds_opt->excludes(seed_opt);

  auto* stair = app.add_subcommand("staircase", "sweep the ladder transfer curve");
  add_common(stair);

  auto* power = app.add_subcommand("power-compare",
                                   "isolation amplifier vs AIMQ power budget");
  add_common(power);
  struct PowerFlag {
    const char* name;
    std::optional<double>* target;
    double value = 0.0;
    CLI::Option* opt = nullptr;
  };
  std::vector<PowerFlag> power_flags{
      {"--v-pri", &spec.v_pri}, {"--i-b", &spec.i_b},
      {"--v-iso", &spec.v_iso}, {"--i-pri", &spec.i_pri},
      {"--eta", &spec.eta},     {"--v-sec", &spec.v_sec},
      {"--i-sec", &spec.i_sec}, {"--i-zf", &spec.i_zf},
      {"--i-out", &spec.i_out},
  };
  for (auto& f : power_flags) f.opt = power->add_option(f.name, f.value);

  auto* enc = app.add_subcommand("encode", "binary to one-hot conversion");
  auto* level_opt = enc->add_option("--level", level, "level to encode");
  enc->add_option("--width", spec.width, "word width N")->check(
      CLI::Range(1, OneHotWord::kMaxWidth));
  auto* table_opt = enc->add_option("--table", table, "print levels 0..N")
                        ->check(CLI::Range(1, OneHotWord::kMaxWidth));
  table_opt->excludes(level_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (!out_dir.empty()) {
    spec.out_dir = out_dir;
  } else if (const char* env = std::getenv("AIMQ_OUTPUT_DIR");
             env != nullptr && *env != '\0') {
    spec.out_dir = env;
  }
  if (*seed_opt) spec.seed = seed;
  if (*steps_opt) spec.steps = steps;
  if (*v0_opt) spec.v0 = v0;
  if (*trace_opt) spec.trace_in = trace_in;
  if (*level_opt) spec.level = level;
  if (*table_opt) spec.table = table;
  for (auto& f : power_flags) {
    if (*f.opt) *f.target = f.value;
  }

  try {
    if (*seeds_opt) spec.seeds = parse_seed_range(seeds);
    if (*sim) {
      spec.command = Command::kSimulate;
      return cmd_simulate(spec, out);
    }
    if (*stair) {
      spec.command = Command::kStaircase;
      return cmd_staircase(spec, out);
    }
    if (*power) {
      spec.command = Command::kPowerCompare;
      return cmd_power_compare(spec, out);
    }
    spec.command = Command::kEncode;
    return cmd_encode(spec, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace aimq::cli
