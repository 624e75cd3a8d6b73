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

// Time-stepped simulation of the full measurement chain. Each bus sample is
// held for sample_interval / engine_dt engine steps; every step advances the
// ladder, diode-ORs the active outputs, runs the output filter and books the
// primary-side power.

#include <filesystem>
#include <string>

#include "aimq/filter.hpp"
#include "aimq/ladder.hpp"
#include "aimq/signal.hpp"
#include "aimq/trace.hpp"

namespace aimq {

struct SimConfig {
  LadderConfig ladder;
  // crossover, gain and Q; the engine runs the filter at engine_dt and
  // ignores filter.sample_interval.
  FilterDesign filter;
  double engine_dt = 0.0;
  double reconstruction_scale = 0.0;
  bool warm_start = true;
  double settling_window = 0.0;

  FilterDesign filter_at_engine_rate() const;
  void validate() const;
};

SimConfig default_sim_config();

// Engine steps per bus sample. Throws ConfigError unless the bus interval is
// an integer multiple of engine_dt.
int hold_steps(const SimConfig& config, double sample_interval);

SimTrace simulate(const SimConfig& config, const BusTrace& bus);

enum class ReconstructionMode {
  // v_recon column: filtered output times reconstruction_scale.
  kScaled,
  // Filtered output mapped back through the level -> threshold staircase,
  // interpolating linearly between adjacent levels.
  kThreshold,
};

// Bus voltage implied by a filtered output under kThreshold.
double reconstruct_threshold(double v_filt, const SimConfig& config);

struct TrackingMetrics {
  double max_abs_error = 0.0;
  double mean_abs_error = 0.0;
  bool settling_excluded = false;
  std::size_t samples_evaluated = 0;
};

// Compares bus voltage against the reconstruction on rows past the settling
// window, skipping transition rows. Throws RangeError when the trace does not
// extend past the settling window.
TrackingMetrics tracking_metrics(const SimTrace& trace, const SimConfig& config,
                                 ReconstructionMode mode);

inline constexpr const char* kTraceCsvHeader =
    "t,v_bus,level,one_hot,v_raw,v_filt,v_recon,p_pri,transition";

std::string trace_csv(const SimTrace& trace);
void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path);

}  // namespace aimq
