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

#include "aimq/engine.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <utility>
#include <vector>

#include "aimq/defaults.hpp"
#include "aimq/errors.hpp"
#include "aimq/power.hpp"

namespace aimq {

FilterDesign SimConfig::filter_at_engine_rate() const {
  FilterDesign d = filter;
  d.sample_interval = engine_dt;
  return d;
}

void SimConfig::validate() const {
  ladder.validate();
  if (!(engine_dt > 0.0) || !std::isfinite(engine_dt)) {
    throw ConfigError("engine dt must be positive");
  }
  filter_at_engine_rate().validate();
  if (!(reconstruction_scale > 0.0)) {
    throw ConfigError("reconstruction scale must be positive");
  }
  if (!(settling_window >= 0.0)) {
    throw ConfigError("settling window must be >= 0");
  }
}

SimConfig default_sim_config() {
  using namespace defaults;
  SimConfig c;
  c.ladder = default_ladder();
  c.filter = {kFilterCrossoverHz, kFilterGain, kFilterQ, kEngineDt};
  c.engine_dt = kEngineDt;
  c.reconstruction_scale = kReconstructionScale;
  c.warm_start = true;
  c.settling_window = kSettlingWindow;
  return c;
}

int hold_steps(const SimConfig& config, double sample_interval) {
  if (!(config.engine_dt <= sample_interval * (1.0 + 1e-12))) {
    throw ConfigError("engine dt must not exceed the bus sample interval");
  }
  const double ratio = sample_interval / config.engine_dt;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * ratio) {
    throw ConfigError(fmt::format(
        "bus interval {} s is not a multiple of engine dt {} s",
        sample_interval, config.engine_dt));
  }
  return static_cast<int>(rounded);
}

SimTrace simulate(const SimConfig& config, const BusTrace& bus) {
  config.validate();
  bus.validate();
  const int hold = hold_steps(config, bus.sample_interval);
  const auto& ladder = config.ladder;
  BiquadFilter filter = design_sallen_key(config.filter_at_engine_rate());

  SimTrace trace;
  trace.dt = config.engine_dt;
  trace.channel_count = ladder.size();
  trace.rows.reserve(bus.samples.size() * static_cast<std::size_t>(hold));

  // The ladder starts at its operating point for the first sample.
  LadderState state = settled_state(bus.samples.front(), ladder);
  std::size_t k = 0;
  for (double v_bus : bus.samples) {
    for (int j = 0; j < hold; ++j, ++k) {
      state = step_ladder(state, v_bus, config.engine_dt, ladder);
      const auto conducting = conducting_set(state, ladder);

      TraceRow row;
      row.t = static_cast<double>(k) * config.engine_dt;
      row.v_bus = v_bus;
      row.level = state.active_channel;
      row.transition = state.in_transition();
      row.conductors = static_cast<int>(conducting.size());
      if (conducting.size() <= 1) {
        row.one_hot = one_hot_encode(state.active_channel, ladder.size());
      }
      row.v_raw = raw_output(state, ladder);
      if (k == 0 && config.warm_start) filter.warm_start(row.v_raw);
      row.v_filt = filter.step(row.v_raw);
      row.v_recon = row.v_filt * config.reconstruction_scale;
      row.p_pri = instantaneous_primary_power(v_bus, conducting, ladder);
      trace.rows.push_back(std::move(row));
    }
  }
  return trace;
}

double reconstruct_threshold(double v_filt, const SimConfig& config) {
  const auto& ladder = config.ladder;
  // Knots: (diode-OR'd output of level n, threshold of level n), with level 0
  // mapped to 0 V. Levels whose output collapses onto an earlier knot keep
  // the higher threshold.
  std::vector<std::pair<double, double>> knots{{0.0, 0.0}};
  for (const auto& ch : ladder.channels) {
    const double x = std::max(0.0, ch.output_level_voltage - ladder.diode_drop);
    if (x > knots.back().first) {
      knots.emplace_back(x, ch.threshold());
    } else {
      knots.back().second = ch.threshold();
    }
  }
  const double raw = v_filt / config.filter.gain;
  if (raw <= knots.front().first) return knots.front().second;
  if (raw >= knots.back().first) return knots.back().second;
  const auto hi = std::ranges::upper_bound(
      knots, raw, {}, [](const auto& kv) { return kv.first; });
  const auto lo = hi - 1;
  const double frac = (raw - lo->first) / (hi->first - lo->first);
  return lo->second + frac * (hi->second - lo->second);
}

TrackingMetrics tracking_metrics(const SimTrace& trace, const SimConfig& config,
                                 ReconstructionMode mode) {
  if (trace.empty() ||
      trace.rows.back().t + trace.dt <= config.settling_window) {
    throw RangeError("trace is shorter than the settling window");
  }
  TrackingMetrics m;
  m.settling_excluded = config.settling_window > 0.0;
  double total = 0.0;
  for (const auto& row : trace.rows) {
    if (row.t < config.settling_window || row.transition) continue;
    const double recon = mode == ReconstructionMode::kScaled
                             ? row.v_recon
                             : reconstruct_threshold(row.v_filt, config);
    const double err = std::abs(row.v_bus - recon);
    m.max_abs_error = std::max(m.max_abs_error, err);
    total += err;
    ++m.samples_evaluated;
  }
  if (m.samples_evaluated > 0) {
    m.mean_abs_error = total / static_cast<double>(m.samples_evaluated);
  }
  return m;
}

std::string trace_csv(const SimTrace& trace) {
  std::string out;
  out.reserve(trace.size() * 96 + 64);
  out += kTraceCsvHeader;
  out += '\n';
  for (const auto& r : trace.rows) {
    fmt::format_to(std::back_inserter(out),
                   "{:.9g},{:.9g},{},{},{:.9g},{:.9g},{:.9g},{:.9g},{}\n", r.t,
                   r.v_bus, r.level,
                   r.one_hot ? r.one_hot->to_string() : std::string("--"),
                   r.v_raw, r.v_filt, r.v_recon, r.p_pri,
                   r.transition ? 1 : 0);
  }
  return out;
}

void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << trace_csv(trace);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace aimq
