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

// Effective configuration for a CLI run and its flat INI-style file format:
//
//   [ladder]
//   thresholds = 66,76,86,96,106,116,126,136
//   v_adc_max = 5
//   ...
//
// Sections: ladder, filter, engine, signal, power. Instead of `thresholds`,
// a ladder may be given as `channels`, `min_threshold` and `spacing`.
// Omitted keys keep their defaults; unknown keys are rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "aimq/engine.hpp"
#include "aimq/ladder.hpp"
#include "aimq/power.hpp"
#include "aimq/signal.hpp"

namespace aimq::cli {

struct SignalSettings {
  std::string source = "random_walk";  // random_walk | constant | ramp | file
  double v0 = 0.0;                     // start (or constant) voltage
  double v_end = 0.0;                  // ramp end
  int steps = 0;
  double t_s = 0.0;
  std::uint64_t seed = 0;
  std::optional<WalkClamp> clamp;
  std::string trace_file;

  friend bool operator==(const SignalSettings&, const SignalSettings&) =
      default;
};

struct RunConfig {
  LadderParams ladder;
  double filter_crossover_hz = 0.0;
  double filter_gain = 0.0;
  double filter_q = 0.0;
  double engine_dt = 0.0;
  double reconstruction_scale = 0.0;
  bool warm_start = true;
  double settling_window = 0.0;
  SignalSettings signal;
  IsoAmpBudget iso;
  AimqBudget aimq;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig default_run_config();

// Overlays `text` on the defaults. Throws ParseError or ConfigError.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::filesystem::path& path);

// Every key, at round-trip precision; parse_run_config(dump) == config.
std::string dump_run_config(const RunConfig& config);

SimConfig to_sim_config(const RunConfig& config);
BusTrace make_bus(const RunConfig& config);

// FNV-1a 64 of the dumped default configuration, as 16 hex digits.
std::string defaults_hash();

}  // namespace aimq::cli
