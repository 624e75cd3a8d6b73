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

// Idealized behavioral models of the discrete parts a channel is built from.
// Values are in SI units throughout (volts, amperes, ohms).

#include <span>

namespace aimq {

struct ZenerStack {
  double breakdown_voltage = 0.0;
  // Slope above breakdown; only meaningful when current limiting is off.
  double dynamic_resistance = 0.0;

  void validate() const;
};

struct Optocoupler {
  double forward_current = 0.0;  // LED drive while the channel is active
  double ctr = 0.0;              // current transfer ratio
  double pull_down_resistance = 0.0;

  void validate() const;
};

struct Transistor {
  double beta = 0.0;

  void validate() const;
};

// A stack conducts once the applied voltage reaches breakdown; a tie counts
// as conducting.
bool zener_conducts(double v_applied, const ZenerStack& stack);

// Breakdown current through an unlimited stack (dynamic-resistance mode).
double zener_current(double v_applied, const ZenerStack& stack);

// Base current of the series-pass transistor, I_B = I_C / beta.
double base_current(double collector_current, const Transistor& transistor);

// Output-side voltage: CTR * I_f * R_pull.
double opto_output_voltage(const Optocoupler& opto);

// Diode-OR of the candidate node voltages: max(0, max(v) - drop), 0 if empty.
double diode_or(std::span<const double> candidate_voltages, double diode_drop);

}  // namespace aimq
