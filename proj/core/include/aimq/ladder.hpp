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

#pragma once

// The quantizer ladder: N Zener-thresholded channels where the highest
// conducting channel turns off every lower one, leaving a single active
// optocoupler (one-hot) in steady state. Level changes pass through a short
// overlap window during which the old and new channels both conduct.

#include <vector>

#include "aimq/devices.hpp"
#include "aimq/encoding.hpp"

namespace aimq {

struct ChannelSpec {
  int index = 0;  // 1-based level number
  ZenerStack zener;
  Optocoupler opto;
  double output_level_voltage = 0.0;  // v_adc_max * index / N

  double threshold() const { return zener.breakdown_voltage; }
};

struct LadderConfig {
  std::vector<ChannelSpec> channels;  // ascending thresholds
  double v_adc_max = 0.0;
  double diode_drop = 0.0;
  double overlap_time = 0.0;

  int size() const { return static_cast<int>(channels.size()); }
  const ChannelSpec& channel(int level) const;
  double threshold(int level) const { return channel(level).threshold(); }

  // Full-scale ratio gamma = V_Z,max / V_ADC,max.
  double scale_factor() const;

  // Throws ConfigError on any broken invariant.
  void validate() const;
};

struct LadderParams {
  std::vector<double> thresholds;
  double v_adc_max = 0.0;
  double diode_drop = 0.0;
  double overlap_time = 0.0;
  double forward_current = 0.0;
  double ctr = 0.0;
  double zener_dynamic_resistance = 0.0;

  friend bool operator==(const LadderParams&, const LadderParams&) = default;
};

// Builds a validated ladder. Each channel's pull-down resistor is sized so
// that its optocoupler output equals the channel's output level.
LadderConfig make_ladder(const LadderParams& params);

// Evenly spaced thresholds: first, first + spacing, ...
std::vector<double> uniform_thresholds(double first, double spacing, int count);

// Eight channels at 66, 76, ..., 136 V with a 5 V ADC full scale.
LadderParams default_ladder_params();
LadderConfig default_ladder();

// Steady-state winner of the turnoff cascade: the highest level whose
// threshold is <= v_pri, or 0 when none conducts.
int select_level(double v_pri, const LadderConfig& config);

// A level change in progress has previous_channel != active_channel; both
// conduct until time_in_transition reaches the overlap time.
struct LadderState {
  int active_channel = 0;
  int previous_channel = 0;
  double time_in_transition = 0.0;

  bool in_transition() const { return previous_channel != active_channel; }

  friend bool operator==(const LadderState&, const LadderState&) = default;
};

// Steady state for the given input (no transition pending).
LadderState settled_state(double v_pri, const LadderConfig& config);

LadderState step_ladder(const LadderState& state, double v_pri, double dt,
                        const LadderConfig& config);

// Ascending levels that currently conduct (empty, one, or two entries).
std::vector<int> conducting_set(const LadderState& state,
                                const LadderConfig& config);

double raw_output(const LadderState& state, const LadderConfig& config);

// Throws OverlapError while a transition is in progress.
OneHotWord one_hot_word(const LadderState& state, const LadderConfig& config);

}  // namespace aimq
