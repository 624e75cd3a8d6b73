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

#include "aimq/power.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>

#include "aimq/errors.hpp"

namespace aimq {

namespace {

void require_non_negative(double v, const char* name) {
  if (!(v >= 0.0)) {
    throw ConfigError(fmt::format("{} must be non-negative", name));
  }
}

}  // namespace

void IsoAmpBudget::validate() const {
  require_non_negative(v_pri, "v_pri");
  require_non_negative(i_b, "i_b");
  require_non_negative(v_iso, "v_iso");
  require_non_negative(i_pri, "i_pri");
  require_non_negative(v_sec, "v_sec");
  require_non_negative(i_sec, "i_sec");
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw ConfigError("converter efficiency must lie in (0, 1]");
  }
}

void AimqBudget::validate() const {
  require_non_negative(v_pri, "v_pri");
  require_non_negative(i_zf, "i_zf");
  require_non_negative(v_sec, "v_sec");
  require_non_negative(i_out, "i_out");
}

double instantaneous_primary_power(double v_pri,
                                   std::span<const int> conducting,
                                   const LadderConfig& config) {
  double current = 0.0;
  for (int level : conducting) {
    current += config.channel(level).opto.forward_current;
  }
  return v_pri * current;
}

double iso_amp_total_power(const IsoAmpBudget& b) {
  b.validate();
  return b.v_pri * 10.0 * b.i_b + b.v_iso * b.i_pri / b.eta + b.v_sec * b.i_sec;
}

double aimq_total_power(const AimqBudget& b) {
  b.validate();
  return b.v_pri * b.i_zf + b.v_sec * b.i_out;
}

double power_ratio(const IsoAmpBudget& iso, const AimqBudget& aimq,
                   bool neglect_secondary) {
  double num = 0.0;
  double den = 0.0;
  if (neglect_secondary) {
    iso.validate();
    aimq.validate();
    num = aimq.v_pri * aimq.i_zf;
    den = iso.v_pri * 10.0 * iso.i_b + iso.v_iso * iso.i_pri / iso.eta;
  } else {
    num = aimq_total_power(aimq);
    den = iso_amp_total_power(iso);
  }
  if (!(den > 0.0)) {
    throw RangeError("isolation-amplifier power is zero; ratio undefined");
  }
  return num / den;
}

bool secondary_negligible(const AimqBudget& aimq, double fraction) {
  return aimq.v_sec * aimq.i_out <= fraction * aimq.v_pri * aimq.i_zf;
}

PowerReport summarize_power(const SimTrace& trace) {
  if (trace.empty()) throw RangeError("cannot summarize an empty trace");
  PowerReport r;
  r.steady_min = std::numeric_limits<double>::infinity();
  r.steady_max = -std::numeric_limits<double>::infinity();
  double total = 0.0;
  double steady_total = 0.0;
  bool in_spike = false;
  for (const auto& row : trace.rows) {
    total += row.p_pri;
    r.peak_primary_power = std::max(r.peak_primary_power, row.p_pri);
    const bool spike = row.conductors >= 2;
    if (spike) {
      ++r.spike_rows;
      if (!in_spike) ++r.spike_count;
    }
    in_spike = spike;
    if (row.transition) {
      r.transition_energy += row.p_pri * trace.dt;
    } else {
      ++r.steady_rows;
      steady_total += row.p_pri;
      r.steady_min = std::min(r.steady_min, row.p_pri);
      r.steady_max = std::max(r.steady_max, row.p_pri);
    }
  }
  r.mean_primary_power = total / static_cast<double>(trace.size());
  if (r.steady_rows == 0) {
    r.steady_min = r.steady_max = 0.0;
  } else {
    r.steady_mean = steady_total / static_cast<double>(r.steady_rows);
  }
  return r;
}

std::string format_power_report(const PowerReport& r) {
  std::string out;
  out += fmt::format("mean primary power   {:.6g} W\n", r.mean_primary_power);
  out += fmt::format("peak primary power   {:.6g} W\n", r.peak_primary_power);
  out += fmt::format("steady band          [{:.6g}, {:.6g}] W over {} rows\n",
                     r.steady_min, r.steady_max, r.steady_rows);
  out += fmt::format("steady mean          {:.6g} W\n", r.steady_mean);
  out += fmt::format("transition spikes    {} ({} rows)\n", r.spike_count,
                     r.spike_rows);
  out += fmt::format("transition energy    {:.6g} J\n", r.transition_energy);
  return out;
}

std::string power_report_csv(const PowerReport& r) {
  std::string out = "metric,value,unit\n";
  out += fmt::format("mean_primary_power,{:.9g},W\n", r.mean_primary_power);
  out += fmt::format("peak_primary_power,{:.9g},W\n", r.peak_primary_power);
  out += fmt::format("steady_min,{:.9g},W\n", r.steady_min);
  out += fmt::format("steady_max,{:.9g},W\n", r.steady_max);
  out += fmt::format("steady_mean,{:.9g},W\n", r.steady_mean);
  out += fmt::format("steady_rows,{},count\n", r.steady_rows);
  out += fmt::format("spike_count,{},count\n", r.spike_count);
  out += fmt::format("spike_rows,{},count\n", r.spike_rows);
  out += fmt::format("transition_energy,{:.9g},J\n", r.transition_energy);
  return out;
}

}  // namespace aimq
