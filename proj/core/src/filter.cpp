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

#include "aimq/filter.hpp"

#include <cmath>
#include <numbers>

#include "aimq/errors.hpp"

namespace aimq {

void FilterDesign::validate() const {
  if (!(crossover_hz > 0.0)) throw ConfigError("crossover must be positive");
  if (!(gain > 0.0)) throw ConfigError("filter gain must be positive");
  if (!(q > 0.0)) throw ConfigError("filter Q must be positive");
  if (!(sample_interval > 0.0)) {
    throw ConfigError("filter sample interval must be positive");
  }
  if (!(crossover_hz < 0.5 / sample_interval)) {
    throw ConfigError("crossover must lie below half the sample rate");
  }
}

BiquadFilter::BiquadFilter(const Coefficients& c, double sample_interval)
    : c_(c), dt_(sample_interval) {}

double BiquadFilter::step(double x) {
  const double y = c_.b0 * x + z1_;
  z1_ = c_.b1 * x - c_.a1 * y + z2_;
  z2_ = c_.b2 * x - c_.a2 * y;
  return y;
}

void BiquadFilter::reset() { z1_ = z2_ = 0.0; }

void BiquadFilter::warm_start(double x) {
  const double y = dc_gain() * x;
  z2_ = c_.b2 * x - c_.a2 * y;
  z1_ = c_.b1 * x - c_.a1 * y + z2_;
}

double BiquadFilter::dc_gain() const {
  return (c_.b0 + c_.b1 + c_.b2) / (1.0 + c_.a1 + c_.a2);
}

std::complex<double> BiquadFilter::transfer(std::complex<double> z) const {
  const auto zi = 1.0 / z;
  return (c_.b0 + c_.b1 * zi + c_.b2 * zi * zi) /
         (1.0 + c_.a1 * zi + c_.a2 * zi * zi);
}

FrequencyPoint BiquadFilter::response(double f_hz) const {
  const double w = 2.0 * std::numbers::pi * f_hz * dt_;
  const auto h = transfer(std::polar(1.0, w));
  return {std::abs(h), std::arg(h)};
}

std::pair<std::complex<double>, std::complex<double>> BiquadFilter::poles()
    const {
  const std::complex<double> disc = std::sqrt(
      std::complex<double>(c_.a1 * c_.a1 - 4.0 * c_.a2, 0.0));
  return {(-c_.a1 + disc) / 2.0, (-c_.a1 - disc) / 2.0};
}

bool BiquadFilter::is_stable() const {
  const auto [p1, p2] = poles();
  return std::abs(p1) < 1.0 && std::abs(p2) < 1.0;
}

BiquadFilter design_sallen_key(const FilterDesign& design) {
  design.validate();
  const double wc = 2.0 * std::numbers::pi * design.crossover_hz;
  // s -> k (1 - z^-1) / (1 + z^-1), with k chosen so wc maps onto itself.
  const double k = wc / std::tan(wc * design.sample_interval / 2.0);
  const double k2 = k * k;
  const double wc2 = wc * wc;
  const double damp = wc * k / design.q;
  const double a0 = k2 + damp + wc2;

  BiquadFilter::Coefficients c;
  c.a1 = 2.0 * (wc2 - k2) / a0;
  c.a2 = (k2 - damp + wc2) / a0;
  // Analytically 1 + a1 + a2 = 4 wc^2 / a0. Taking the numerator from the
  // rounded denominator keeps the realized DC gain at G for small wc * dt.
  const double num = design.gain * (1.0 + c.a1 + c.a2) / 4.0;
  c.b0 = num;
  c.b1 = 2.0 * num;
  c.b2 = num;
  BiquadFilter filter(c, design.sample_interval);
  if (!filter.is_stable()) throw ConfigError("filter design is unstable");
  return filter;
}

FrequencyPoint frequency_response(const BiquadFilter& filter, double f_hz) {
  const double nyquist = 0.5 / filter.sample_interval();
  if (!(f_hz >= 0.0) || f_hz > nyquist) {
    throw RangeError("frequency outside [0, half rate]");
  }
  return filter.response(f_hz);
}

double analog_magnitude(const FilterDesign& design, double f_hz) {
  const double wc = 2.0 * std::numbers::pi * design.crossover_hz;
  const double w = 2.0 * std::numbers::pi * f_hz;
  const std::complex<double> s(0.0, w);
  return std::abs(design.gain * wc * wc / (s * s + (wc / design.q) * s + wc * wc));
}

}  // namespace aimq
