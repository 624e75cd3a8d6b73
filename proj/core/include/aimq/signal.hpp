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

// Bus-voltage test signals and the plain-text trace format:
//
//   t_s=<seconds>
//   <volts>
//   <volts>
//   ...

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace aimq {

struct BusTrace {
  double sample_interval = 0.0;
  std::vector<double> samples;
  std::uint64_t seed = 0;

  void validate() const;
  double duration() const { return sample_interval * samples.size(); }
};

// Optional bounds applied after every random-walk increment.
struct WalkClamp {
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const WalkClamp&, const WalkClamp&) = default;
};

// Random-walk noise source: std::mt19937_64 (fully specified by the C++
// standard) with the top 53 bits of each draw mapped to the open interval
// (-1, 1). The mapping is done here rather than through
// std::uniform_real_distribution, whose algorithm is implementation-defined.
class WalkNoise {
 public:
  static constexpr const char* kName = "mt19937_64/53-bit open (-1,1)";

  explicit WalkNoise(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  std::mt19937_64 engine_;
};

// samples[0] = v0; samples[n] = samples[n-1] + U(-1, 1).
BusTrace random_walk_bus(double v0, int steps, double t_s, std::uint64_t seed,
                         std::optional<WalkClamp> clamp = std::nullopt);

// Linear interpolation from v_start to v_end, both endpoints included.
BusTrace ramp(double v_start, double v_end, int steps, double t_s);

BusTrace constant(double v, int steps, double t_s);

BusTrace load_trace(const std::filesystem::path& path);
BusTrace parse_trace(const std::string& text);

// Writes with round-trip precision so load_trace reproduces the samples.
void write_trace(const BusTrace& trace, const std::filesystem::path& path);
std::string format_trace(const BusTrace& trace);

}  // namespace aimq
