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

#include "aimq/signal.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "aimq/errors.hpp"

namespace aimq {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
  double value = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

void check_interval(double t_s) {
  if (!(t_s > 0.0) || !std::isfinite(t_s)) {
    throw ConfigError("sample interval must be positive");
  }
}

}  // namespace

void BusTrace::validate() const {
  check_interval(sample_interval);
  if (samples.empty()) throw ConfigError("bus trace has no samples");
}

double WalkNoise::next() {
  // (k + 0.5) / 2^53 lies strictly inside (0, 1).
  const auto k = engine_() >> 11;
  const double u = (static_cast<double>(k) + 0.5) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

BusTrace random_walk_bus(double v0, int steps, double t_s, std::uint64_t seed,
                         std::optional<WalkClamp> clamp) {
  if (steps < 1) throw ConfigError("random walk needs at least one step");
  check_interval(t_s);
  if (clamp && !(clamp->min <= clamp->max)) {
    throw ConfigError("walk clamp min must not exceed max");
  }
  BusTrace trace{t_s, {}, seed};
  trace.samples.reserve(static_cast<std::size_t>(steps));
  trace.samples.push_back(v0);
  WalkNoise noise(seed);
  for (int n = 1; n < steps; ++n) {
    double v = trace.samples.back() + noise.next();
    if (clamp) v = std::clamp(v, clamp->min, clamp->max);
    trace.samples.push_back(v);
  }
  return trace;
}

BusTrace ramp(double v_start, double v_end, int steps, double t_s) {
  if (steps < 2) throw ConfigError("ramp needs at least two steps");
  check_interval(t_s);
  BusTrace trace{t_s, {}, 0};
  trace.samples.reserve(static_cast<std::size_t>(steps));
  const double span = v_end - v_start;
  for (int i = 0; i < steps; ++i) {
    trace.samples.push_back(v_start + span * i / (steps - 1));
  }
  trace.samples.back() = v_end;
  return trace;
}

BusTrace constant(double v, int steps, double t_s) {
  if (steps < 1) throw ConfigError("constant trace needs at least one step");
  check_interval(t_s);
  return BusTrace{t_s, std::vector<double>(static_cast<std::size_t>(steps), v),
                  0};
}

BusTrace parse_trace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty trace file", 1);
  ++line_no;

  const auto header = trim(line);
  constexpr std::string_view kKey = "t_s=";
  if (!header.starts_with(kKey)) {
    throw ParseError("expected header 't_s=<seconds>'", line_no);
  }
  const auto t_s = parse_double(trim(header.substr(kKey.size())));
  if (!t_s) throw ParseError("bad sample interval", line_no);
  if (!(*t_s > 0.0)) throw ConfigError("sample interval must be positive");

  BusTrace trace{*t_s, {}, 0};
  int blank_run_start = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) {
      if (blank_run_start == 0) blank_run_start = line_no;
      continue;
    }
    if (blank_run_start != 0) {
      throw ParseError("blank line inside trace", blank_run_start);
    }
    const auto v = parse_double(body);
    if (!v) throw ParseError("bad voltage '" + std::string(body) + "'", line_no);
    trace.samples.push_back(*v);
  }
  if (trace.samples.empty()) {
    throw ParseError("trace has no samples", line_no + 1);
  }
  return trace;
}

BusTrace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open trace file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trace(buffer.str());
}

std::string format_trace(const BusTrace& trace) {
  std::string out = fmt::format("t_s={}\n", trace.sample_interval);
  for (double v : trace.samples) out += fmt::format("{}\n", v);
  return out;
}

void write_trace(const BusTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write trace file " + path.string());
  out << format_trace(trace);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace aimq
