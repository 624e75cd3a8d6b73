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

// Second-order low-pass matching the parent board's Sallen-Key stage,
//
//   H(s) = G wc^2 / (s^2 + (wc / Q) s + wc^2),   wc = 2 pi fc,
//
// discretized with the bilinear transform pre-warped at fc so the discrete
// response hits the analog magnitude exactly at the crossover.

#include <complex>
#include <utility>

namespace aimq {

struct FilterDesign {
  double crossover_hz = 0.0;
  double gain = 0.0;
  double q = 0.0;
  double sample_interval = 0.0;

  // Throws ConfigError on a broken invariant, including fc >= half rate.
  void validate() const;

  friend bool operator==(const FilterDesign&, const FilterDesign&) = default;
};

struct FrequencyPoint {
  double magnitude = 0.0;
  double phase = 0.0;  // radians
};

// Transposed direct form II biquad.
class BiquadFilter {
 public:
  struct Coefficients {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;  // a0 normalized to 1
  };

  BiquadFilter(const Coefficients& c, double sample_interval);

  const Coefficients& coefficients() const { return c_; }
  double sample_interval() const { return dt_; }

  double step(double x);

  // Zero state.
  void reset();
  // State for a settled constant input, so the next output is dc_gain() * x.
  void warm_start(double x);

  double dc_gain() const;
  FrequencyPoint response(double f_hz) const;
  std::complex<double> transfer(std::complex<double> z) const;

  // Roots of z^2 + a1 z + a2.
  std::pair<std::complex<double>, std::complex<double>> poles() const;
  bool is_stable() const;

 private:
  Coefficients c_;
  double dt_;
  double z1_ = 0.0;
  double z2_ = 0.0;
};

BiquadFilter design_sallen_key(const FilterDesign& design);

inline double filter_step(BiquadFilter& filter, double x) {
  return filter.step(x);
}

// Evaluates the discrete transfer function on the unit circle. Throws
// RangeError for f outside [0, 1 / (2 dt)].
FrequencyPoint frequency_response(const BiquadFilter& filter, double f_hz);

// The continuous-time prototype |H(j 2 pi f)|.
double analog_magnitude(const FilterDesign& design, double f_hz);

}  // namespace aimq
