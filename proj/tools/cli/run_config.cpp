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

#include "run_config.hpp"

#include <fmt/format.h>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "aimq/defaults.hpp"
#include "aimq/errors.hpp"

namespace aimq::cli {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"ladder",
       {"thresholds", "channels", "min_threshold", "spacing", "v_adc_max",
        "diode_drop", "overlap_time", "forward_current", "ctr",
        "zener_dynamic_resistance"}},
      {"filter", {"crossover_hz", "gain", "q"}},
      {"engine",
       {"dt", "reconstruction_scale", "warm_start", "settling_window"}},
      {"signal",
       {"source", "v0", "v_end", "steps", "t_s", "seed", "clamp_min",
        "clamp_max", "trace_file"}},
      {"power",
       {"v_pri", "i_b", "v_iso", "i_pri", "eta", "v_sec", "i_sec", "i_zf",
        "i_out"}},
  };
  return keys;
}

template <typename T>
void read(const pt::ptree& tree, const std::string& key, T& out) {
  const auto node = tree.get_child_optional(key);
  if (!node) return;
  const auto value = node->get_value_optional<T>();
  if (!value) {
    throw ConfigError(fmt::format("bad value '{}' for {}",
                                  node->get_value<std::string>(), key));
  }
  out = *value;
}

std::vector<double> parse_list(const std::string& key,
                               const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    pt::ptree leaf(item);
    const auto v = leaf.get_value_optional<double>();
    if (!v) throw ConfigError(fmt::format("bad list entry '{}' in {}", item, key));
    out.push_back(*v);
  }
  if (out.empty()) throw ConfigError(key + " must not be empty");
  return out;
}

void check_known(const pt::ptree& tree) {
  const auto& keys = known_keys();
  for (const auto& [section, body] : tree) {
    const auto it = keys.find(section);
    if (it == keys.end()) {
      throw ConfigError("unknown config section [" + section + "]");
    }
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("config key '" + section + "' outside any section");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.contains(key)) {
        throw ConfigError("unknown config key " + section + "." + key);
      }
    }
  }
}

std::string num(double v) { return fmt::format("{}", v); }

}  // namespace

RunConfig default_run_config() {
  using namespace defaults;
  RunConfig c;
  c.ladder = default_ladder_params();
  c.filter_crossover_hz = kFilterCrossoverHz;
  c.filter_gain = kFilterGain;
  c.filter_q = kFilterQ;
  c.engine_dt = kEngineDt;
  c.reconstruction_scale = kReconstructionScale;
  c.warm_start = true;
  c.settling_window = kSettlingWindow;
  c.signal.source = "random_walk";
  c.signal.v0 = kBusStart;
  c.signal.v_end = kBusStart;
  c.signal.steps = kBusSteps;
  c.signal.t_s = kSampleInterval;
  c.signal.seed = kSeed;
  c.iso = {kCompareVPri, kCompareIb, kCompareVIso, kCompareIPri,
           kCompareEta,  kCompareVSec, kCompareISec};
  c.aimq = {kCompareVPri, kCompareIzf, kCompareVSec, kCompareIOut};
  return c;
}

RunConfig parse_run_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.message(), static_cast<int>(e.line()));
  }
  check_known(tree);

  RunConfig c = default_run_config();
  auto& l = c.ladder;
  if (const auto list = tree.get_optional<std::string>("ladder.thresholds")) {
    if (tree.get_child_optional("ladder.channels") ||
        tree.get_child_optional("ladder.min_threshold") ||
        tree.get_child_optional("ladder.spacing")) {
      throw ConfigError(
          "ladder.thresholds conflicts with channels/min_threshold/spacing");
    }
    l.thresholds = parse_list("ladder.thresholds", *list);
  } else if (tree.get_child_optional("ladder.channels") ||
             tree.get_child_optional("ladder.min_threshold") ||
             tree.get_child_optional("ladder.spacing")) {
    int channels = defaults::kChannelCount;
    double first = defaults::kMinThreshold;
    double spacing = defaults::kThresholdSpacing;
    read(tree, "ladder.channels", channels);
    read(tree, "ladder.min_threshold", first);
    read(tree, "ladder.spacing", spacing);
    if (channels < 1) throw ConfigError("ladder.channels must be >= 1");
    l.thresholds = uniform_thresholds(first, spacing, channels);
  }
  read(tree, "ladder.v_adc_max", l.v_adc_max);
  read(tree, "ladder.diode_drop", l.diode_drop);
  read(tree, "ladder.overlap_time", l.overlap_time);
  read(tree, "ladder.forward_current", l.forward_current);
  read(tree, "ladder.ctr", l.ctr);
  read(tree, "ladder.zener_dynamic_resistance", l.zener_dynamic_resistance);

  read(tree, "filter.crossover_hz", c.filter_crossover_hz);
  read(tree, "filter.gain", c.filter_gain);
  read(tree, "filter.q", c.filter_q);

  read(tree, "engine.dt", c.engine_dt);
  read(tree, "engine.reconstruction_scale", c.reconstruction_scale);
  read(tree, "engine.warm_start", c.warm_start);
  read(tree, "engine.settling_window", c.settling_window);

  auto& s = c.signal;
  read(tree, "signal.source", s.source);
  read(tree, "signal.v0", s.v0);
  read(tree, "signal.v_end", s.v_end);
  read(tree, "signal.steps", s.steps);
  read(tree, "signal.t_s", s.t_s);
  read(tree, "signal.seed", s.seed);
  read(tree, "signal.trace_file", s.trace_file);
  const bool has_min = tree.get_child_optional("signal.clamp_min").has_value();
  const bool has_max = tree.get_child_optional("signal.clamp_max").has_value();
  if (has_min != has_max) {
    throw ConfigError("signal.clamp_min and signal.clamp_max go together");
  }
  if (has_min) {
    WalkClamp clamp;
    read(tree, "signal.clamp_min", clamp.min);
    read(tree, "signal.clamp_max", clamp.max);
    s.clamp = clamp;
  }
  if (s.source != "random_walk" && s.source != "constant" &&
      s.source != "ramp" && s.source != "file") {
    throw ConfigError("signal.source must be random_walk, constant, ramp or file");
  }

  double v_pri = c.iso.v_pri;
  double v_sec = c.iso.v_sec;
  read(tree, "power.v_pri", v_pri);
  read(tree, "power.v_sec", v_sec);
  c.iso.v_pri = c.aimq.v_pri = v_pri;
  c.iso.v_sec = c.aimq.v_sec = v_sec;
  read(tree, "power.i_b", c.iso.i_b);
  read(tree, "power.v_iso", c.iso.v_iso);
  read(tree, "power.i_pri", c.iso.i_pri);
  read(tree, "power.eta", c.iso.eta);
  read(tree, "power.i_sec", c.iso.i_sec);
  read(tree, "power.i_zf", c.aimq.i_zf);
  read(tree, "power.i_out", c.aimq.i_out);
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

std::string dump_run_config(const RunConfig& c) {
  std::string thresholds;
  for (std::size_t i = 0; i < c.ladder.thresholds.size(); ++i) {
    if (i > 0) thresholds += ',';
    thresholds += num(c.ladder.thresholds[i]);
  }
  std::string out;
  out += "[ladder]\n";
  out += "thresholds = " + thresholds + "\n";
  out += "v_adc_max = " + num(c.ladder.v_adc_max) + "\n";
  out += "diode_drop = " + num(c.ladder.diode_drop) + "\n";
  out += "overlap_time = " + num(c.ladder.overlap_time) + "\n";
  out += "forward_current = " + num(c.ladder.forward_current) + "\n";
  out += "ctr = " + num(c.ladder.ctr) + "\n";
  out += "zener_dynamic_resistance = " +
         num(c.ladder.zener_dynamic_resistance) + "\n";
  out += "\n[filter]\n";
  out += "crossover_hz = " + num(c.filter_crossover_hz) + "\n";
  out += "gain = " + num(c.filter_gain) + "\n";
  out += "q = " + num(c.filter_q) + "\n";
  out += "\n[engine]\n";
  out += "dt = " + num(c.engine_dt) + "\n";
  out += "reconstruction_scale = " + num(c.reconstruction_scale) + "\n";
  out += std::string("warm_start = ") + (c.warm_start ? "true" : "false") +
         "\n";
  out += "settling_window = " + num(c.settling_window) + "\n";
  out += "\n[signal]\n";
  out += "source = " + c.signal.source + "\n";
  out += "v0 = " + num(c.signal.v0) + "\n";
  out += "v_end = " + num(c.signal.v_end) + "\n";
  out += fmt::format("steps = {}\n", c.signal.steps);
  out += "t_s = " + num(c.signal.t_s) + "\n";
  out += fmt::format("seed = {}\n", c.signal.seed);
  if (c.signal.clamp) {
    out += "clamp_min = " + num(c.signal.clamp->min) + "\n";
    out += "clamp_max = " + num(c.signal.clamp->max) + "\n";
  }
  if (!c.signal.trace_file.empty()) {
    out += "trace_file = " + c.signal.trace_file + "\n";
  }
  out += "\n[power]\n";
  out += "v_pri = " + num(c.iso.v_pri) + "\n";
  out += "i_b = " + num(c.iso.i_b) + "\n";
  out += "v_iso = " + num(c.iso.v_iso) + "\n";
  out += "i_pri = " + num(c.iso.i_pri) + "\n";
  out += "eta = " + num(c.iso.eta) + "\n";
  out += "v_sec = " + num(c.iso.v_sec) + "\n";
  out += "i_sec = " + num(c.iso.i_sec) + "\n";
  out += "i_zf = " + num(c.aimq.i_zf) + "\n";
  out += "i_out = " + num(c.aimq.i_out) + "\n";
  return out;
}

SimConfig to_sim_config(const RunConfig& c) {
  SimConfig s;
  s.ladder = make_ladder(c.ladder);
  s.filter = {c.filter_crossover_hz, c.filter_gain, c.filter_q, c.engine_dt};
  s.engine_dt = c.engine_dt;
  s.reconstruction_scale = c.reconstruction_scale;
  s.warm_start = c.warm_start;
  s.settling_window = c.settling_window;
  s.validate();
  return s;
}

BusTrace make_bus(const RunConfig& c) {
  const auto& s = c.signal;
  if (s.source == "file") {
    if (s.trace_file.empty()) {
      throw ConfigError("signal.source = file needs signal.trace_file");
    }
    return load_trace(s.trace_file);
  }
  if (s.source == "constant") return constant(s.v0, s.steps, s.t_s);
  if (s.source == "ramp") return ramp(s.v0, s.v_end, s.steps, s.t_s);
  return random_walk_bus(s.v0, s.steps, s.t_s, s.seed, s.clamp);
}

std::string defaults_hash() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : dump_run_config(default_run_config())) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace aimq::cli
