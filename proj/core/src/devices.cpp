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

#include "aimq/devices.hpp"

#include <algorithm>

#include "aimq/errors.hpp"

namespace aimq {

void ZenerStack::validate() const {
  if (!(breakdown_voltage > 0.0)) {
    throw ConfigError("zener breakdown voltage must be positive");
  }
  if (!(dynamic_resistance > 0.0)) {
    throw ConfigError("zener dynamic resistance must be positive");
  }
}

void Optocoupler::validate() const {
  if (!(forward_current > 0.0)) {
    throw ConfigError("optocoupler forward current must be positive");
  }
  if (!(ctr > 0.0)) throw ConfigError("optocoupler CTR must be positive");
  if (!(pull_down_resistance > 0.0)) {
    throw ConfigError("pull-down resistance must be positive");
  }
}

void Transistor::validate() const {
  if (!(beta > 0.0)) throw ConfigError("transistor beta must be positive");
}

bool zener_conducts(double v_applied, const ZenerStack& stack) {
  return v_applied >= stack.breakdown_voltage;
}

double zener_current(double v_applied, const ZenerStack& stack) {
  if (!zener_conducts(v_applied, stack)) return 0.0;
  return (v_applied - stack.breakdown_voltage) / stack.dynamic_resistance;
}

double base_current(double collector_current, const Transistor& transistor) {
  return collector_current / transistor.beta;
}

double opto_output_voltage(const Optocoupler& opto) {
  return opto.ctr * opto.forward_current * opto.pull_down_resistance;
}

double diode_or(std::span<const double> candidate_voltages,
                double diode_drop) {
  if (candidate_voltages.empty()) return 0.0;
  const double top = *std::ranges::max_element(candidate_voltages);
  return std::max(0.0, top - diode_drop);
}

}  // namespace aimq
