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

// Primary-side power accounting for simulated traces, and the closed-form
// budget comparison between an isolation-amplifier front end and the ladder.

#include <span>
#include <string>

#include "aimq/ladder.hpp"
#include "aimq/trace.hpp"

namespace aimq {

// Isolation-amplifier budget. The divider is fed 10 * i_b for linearity and
// the amplifier's primary supply comes from a converter of efficiency eta.
struct IsoAmpBudget {
  double v_pri = 0.0;
  double i_b = 0.0;
  double v_iso = 0.0;
  double i_pri = 0.0;
  double eta = 0.0;
  double v_sec = 0.0;
  double i_sec = 0.0;

  void validate() const;

  friend bool operator==(const IsoAmpBudget&, const IsoAmpBudget&) = default;
};

// i_zf is the larger of the Zener knee current and the LED forward current.
struct AimqBudget {
  double v_pri = 0.0;
  double i_zf = 0.0;
  double v_sec = 0.0;
  double i_out = 0.0;

  void validate() const;

  friend bool operator==(const AimqBudget&, const AimqBudget&) = default;
};

// v_pri * sum of forward currents of the conducting channels.
double instantaneous_primary_power(double v_pri, std::span<const int> conducting,
                                   const LadderConfig& config);

// v_pri * 10 * i_b + v_iso * i_pri / eta + v_sec * i_sec
double iso_amp_total_power(const IsoAmpBudget& b);

// v_pri * i_zf + v_sec * i_out
double aimq_total_power(const AimqBudget& b);

// Ratio of ladder power to isolation-amplifier power. With neglect_secondary
// the v_sec terms are dropped from both totals; when i_b == i_zf this is
// 1 / (10 + (v_iso i_pri / eta) / (v_pri i_zf)). Throws RangeError on a zero
// denominator.
double power_ratio(const IsoAmpBudget& iso, const AimqBudget& aimq,
                   bool neglect_secondary);

// True when v_sec * i_out is at most `fraction` of v_pri * i_zf.
bool secondary_negligible(const AimqBudget& aimq, double fraction = 0.01);

struct PowerReport {
  double mean_primary_power = 0.0;
  double peak_primary_power = 0.0;
  int spike_count = 0;  // maximal runs with two or more conductors
  double steady_min = 0.0;
  double steady_max = 0.0;
  double steady_mean = 0.0;
  std::size_t steady_rows = 0;
  std::size_t spike_rows = 0;
  double transition_energy = 0.0;  // joules spent in transition rows
};

PowerReport summarize_power(const SimTrace& trace);

std::string format_power_report(const PowerReport& report);
// Columns: metric,value,unit
std::string power_report_csv(const PowerReport& report);

}  // namespace aimq
