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

#include <optional>
#include <vector>

#include "aimq/encoding.hpp"

namespace aimq {

// One engine step.
struct TraceRow {
  double t = 0.0;
  double v_bus = 0.0;
  int level = 0;
  std::optional<OneHotWord> one_hot;  // empty during a transition overlap
  double v_raw = 0.0;
  double v_filt = 0.0;
  double v_recon = 0.0;
  double p_pri = 0.0;
  int conductors = 0;
  bool transition = false;
};

struct SimTrace {
  double dt = 0.0;
  int channel_count = 0;
  std::vector<TraceRow> rows;

  bool empty() const { return rows.empty(); }
  std::size_t size() const { return rows.size(); }
};

}  // namespace aimq
