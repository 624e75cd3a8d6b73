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

#include "aimq/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aimq/defaults.hpp"
#include "aimq/errors.hpp"

namespace aimq {

namespace {

// Relative slack on the overlap timer so that k steps of dt complete a window
// of exactly k * dt despite accumulated rounding.
constexpr double kTimerSlack = 1e-9;

}  // namespace

const ChannelSpec& LadderConfig::channel(int level) const {
  if (level < 1 || level > size()) {
    throw RangeError("no channel for level " + std::to_string(level));
  }
  return channels[static_cast<std::size_t>(level - 1)];
}

double LadderConfig::scale_factor() const {
  return channels.back().threshold() / v_adc_max;
}

void LadderConfig::validate() const {
  if (channels.empty()) throw ConfigError("ladder needs at least one channel");
  if (size() > OneHotWord::kMaxWidth) {
    throw ConfigError("ladder supports at most 64 channels");
  }
  if (!(v_adc_max > 0.0)) throw ConfigError("v_adc_max must be positive");
  if (!(diode_drop >= 0.0)) throw ConfigError("diode_drop must be >= 0");
  if (!(overlap_time >= 0.0) || !std::isfinite(overlap_time)) {
    throw ConfigError("overlap_time must be finite and >= 0");
  }
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const auto& ch = channels[static_cast<std::size_t>(i)];
    if (ch.index != i + 1) {
      throw ConfigError("channel indices must run 1..N in order");
    }
    ch.zener.validate();
    ch.opto.validate();
    if (i > 0 && !(ch.threshold() > channels[i - 1].threshold())) {
      throw ConfigError("channel thresholds must strictly increase");
    }
    const double expected = v_adc_max * ch.index / n;
    if (std::abs(ch.output_level_voltage - expected) > 1e-12 * v_adc_max) {
      throw ConfigError("channel " + std::to_string(ch.index) +
                        " output level must equal v_adc_max * n / N");
    }
  }
}

std::vector<double> uniform_thresholds(double first, double spacing,
                                       int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(first + spacing * i);
  return out;
}

LadderConfig make_ladder(const LadderParams& params) {
  LadderConfig config;
  config.v_adc_max = params.v_adc_max;
  config.diode_drop = params.diode_drop;
  config.overlap_time = params.overlap_time;
  const int n = static_cast<int>(params.thresholds.size());
  for (int i = 0; i < n; ++i) {
    ChannelSpec ch;
    ch.index = i + 1;
    ch.zener = {params.thresholds[static_cast<std::size_t>(i)],
                params.zener_dynamic_resistance};
    ch.output_level_voltage = params.v_adc_max * ch.index / n;
    ch.opto.forward_current = params.forward_current;
    ch.opto.ctr = params.ctr;
    if (params.forward_current > 0.0 && params.ctr > 0.0) {
      ch.opto.pull_down_resistance =
          ch.output_level_voltage / (params.ctr * params.forward_current);
    }
    config.channels.push_back(ch);
  }
  config.validate();
  return config;
}

LadderParams default_ladder_params() {
  using namespace defaults;
  return LadderParams{
      .thresholds = uniform_thresholds(kMinThreshold, kThresholdSpacing,
                                       kChannelCount),
      .v_adc_max = kAdcMax,
      .diode_drop = kDiodeDrop,
      .overlap_time = kOverlapTime,
      .forward_current = kForwardCurrent,
      .ctr = kCurrentTransferRatio,
      .zener_dynamic_resistance = kZenerDynamicResistance,
  };
}

LadderConfig default_ladder() { return make_ladder(default_ladder_params()); }

int select_level(double v_pri, const LadderConfig& config) {
  if (std::isnan(v_pri)) throw RangeError("bus voltage is NaN");
  // Thresholds ascend, so the winner is the count of thresholds <= v_pri.
  const auto it = std::ranges::upper_bound(
      config.channels, v_pri, {}, [](const ChannelSpec& ch) {
        return ch.threshold();
      });
  return static_cast<int>(it - config.channels.begin());
}

LadderState settled_state(double v_pri, const LadderConfig& config) {
  const int level = select_level(v_pri, config);
  return LadderState{level, level, 0.0};
}

LadderState step_ladder(const LadderState& state, double v_pri, double dt,
                        const LadderConfig& config) {
  if (!(dt > 0.0)) throw RangeError("ladder step dt must be positive");
  LadderState next = state;
  const int target = select_level(v_pri, config);
  if (target != next.active_channel) {
    // A retarget keeps the channel that was last fully on as the partner.
    if (!next.in_transition()) next.previous_channel = next.active_channel;
    next.active_channel = target;
    next.time_in_transition = 0.0;
  }
  if (next.in_transition()) {
    next.time_in_transition += dt;
    if (next.time_in_transition >= config.overlap_time * (1.0 - kTimerSlack)) {
      next.previous_channel = next.active_channel;
      next.time_in_transition = 0.0;
    }
  }
  return next;
}

std::vector<int> conducting_set(const LadderState& state,
                                const LadderConfig& config) {
  (void)config;
  std::vector<int> out;
  if (state.in_transition() && state.previous_channel != 0) {
    out.push_back(state.previous_channel);
  }
  if (state.active_channel != 0) out.push_back(state.active_channel);
  std::ranges::sort(out);
  return out;
}

double raw_output(const LadderState& state, const LadderConfig& config) {
  std::vector<double> candidates;
  for (int level : conducting_set(state, config)) {
    candidates.push_back(config.channel(level).output_level_voltage);
  }
  return diode_or(candidates, config.diode_drop);
}

OneHotWord one_hot_word(const LadderState& state, const LadderConfig& config) {
  if (conducting_set(state, config).size() > 1) {
    throw OverlapError("two channels conduct during a level transition");
  }
  return one_hot_encode(state.active_channel, config.size());
}

}  // namespace aimq
