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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "run_config.hpp"

namespace aimq::cli {

// Stable exit-status contract for scripting.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,  // bad flags, bad configuration, precondition violation
  kExitIo = 3,
};

enum class Command { kSimulate, kStaircase, kPowerCompare, kEncode };

struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

// One parsed invocation.
struct RunSpec {
  Command command = Command::kSimulate;
  std::string config_path;
  std::filesystem::path out_dir = ".";
  bool dump_config = false;

  // simulate
  std::optional<std::uint64_t> seed;
  std::optional<int> steps;
  std::optional<double> v0;
  std::optional<std::string> trace_in;
  std::optional<SeedRange> seeds;

  // power-compare
  std::optional<double> v_pri, i_b, v_iso, i_pri, eta, v_sec, i_sec, i_zf,
      i_out;

  // encode
  std::optional<int> level;
  int width = 8;
  std::optional<int> table;
};

// Parses "a..b" (inclusive). Throws ConfigError.
SeedRange parse_seed_range(const std::string& text);

// Loads the config file (or defaults) and applies the command-line overrides.
RunConfig effective_config(const RunSpec& spec);

int cmd_simulate(const RunSpec& spec, std::ostream& out);
int cmd_staircase(const RunSpec& spec, std::ostream& out);
int cmd_power_compare(const RunSpec& spec, std::ostream& out);
int cmd_encode(const RunSpec& spec, std::ostream& out);

// Full command line: argument parsing, dispatch and error-to-exit mapping.
// AIMQ_OUTPUT_DIR, when set, replaces the default output directory; an
// explicit --out-dir still wins.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

std::string version_string();

}  // namespace aimq::cli
