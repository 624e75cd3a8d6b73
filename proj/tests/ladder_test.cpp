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

#include "aimq/ladder.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "aimq/errors.hpp"
#include "oracles.hpp"

namespace aimq {
namespace {

std::vector<double> thresholds_of(const LadderConfig& c) {
  std::vector<double> out;
  for (const auto& ch : c.channels) out.push_back(ch.threshold());
  return out;
}

LadderConfig ladder_with_drop(double drop) {
  auto params = default_ladder_params();
  params.diode_drop = drop;
  return make_ladder(params);
}

TEST(DefaultLadderTest, AnchoredThresholds) {
  const auto ladder = default_ladder();
  ASSERT_EQ(ladder.size(), 8);
  EXPECT_EQ(ladder.threshold(8), 136.0);
  EXPECT_EQ(ladder.threshold(6), 116.0);
  EXPECT_EQ(ladder.threshold(1), 66.0);
  EXPECT_EQ(ladder.v_adc_max, 5.0);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_DOUBLE_EQ(ladder.channel(n).output_level_voltage, 5.0 * n / 8);
    EXPECT_DOUBLE_EQ(opto_output_voltage(ladder.channel(n).opto),
                     ladder.channel(n).output_level_voltage);
  }
}

// The 10 V spacing is the uniform grid through the three anchored levels
// (1 -> 66 V, 6 -> 116 V, 8 -> 136 V); a least-squares line through the
// anchors must pass through every default threshold.
TEST(DefaultLadderTest, UniformGridThroughAnchors) {
  const auto fit = testing::fit_line({1.0, 6.0, 8.0}, {66.0, 116.0, 136.0});
  EXPECT_NEAR(fit.slope, 10.0, 1e-12);
  const auto ladder = default_ladder();
  for (int n = 1; n <= 8; ++n) {
    EXPECT_NEAR(ladder.threshold(n), fit.intercept + fit.slope * n, 1e-9);
  }
}

TEST(DefaultLadderTest, ScaleFactor) {
  EXPECT_DOUBLE_EQ(default_ladder().scale_factor(), 136.0 / 5.0);
}

TEST(LadderConfigTest, RejectsBrokenInvariants) {
  auto params = default_ladder_params();
  params.thresholds = {66, 76, 76};
  EXPECT_THROW(make_ladder(params), ConfigError);
  params.thresholds = {};
  EXPECT_THROW(make_ladder(params), ConfigError);
  params = default_ladder_params();
  params.overlap_time = -1e-3;
  EXPECT_THROW(make_ladder(params), ConfigError);
  params = default_ladder_params();
  params.forward_current = 0.0;
  EXPECT_THROW(make_ladder(params), ConfigError);

  auto ladder = default_ladder();
  ladder.channels[2].output_level_voltage = 3.0;
  EXPECT_THROW(ladder.validate(), ConfigError);
}

TEST(SelectLevelTest, Examples) {
  const auto ladder = default_ladder();
  EXPECT_EQ(select_level(120.0, ladder), 6);
  EXPECT_EQ(select_level(10.0, ladder), 0);
  EXPECT_EQ(select_level(140.0, ladder), 8);
  EXPECT_EQ(select_level(66.0, ladder), 1);
  EXPECT_EQ(select_level(65.999, ladder), 0);
  EXPECT_EQ(select_level(-50.0, ladder), 0);
  EXPECT_EQ(select_level(1e6, ladder), 8);
  EXPECT_THROW(select_level(std::nan(""), ladder), RangeError);
}

TEST(SelectLevelTest, AgreesWithLinearScan) {
  const auto ladder = default_ladder();
  const auto th = thresholds_of(ladder);
  auto rng = testing::make_rng(3);
  std::uniform_real_distribution<double> volts(-20.0, 180.0);
  for (int i = 0; i < 10000; ++i) {
    const double v = volts(rng);
    ASSERT_EQ(select_level(v, ladder), testing::brute_force_level(v, th)) << v;
  }
  for (double t : th) {
    EXPECT_EQ(select_level(t, ladder), testing::brute_force_level(t, th));
    const double below = std::nextafter(t, 0.0);
    EXPECT_EQ(select_level(below, ladder),
              testing::brute_force_level(below, th));
  }
}

// Random ladders: non-decreasing staircase and bounded quantization error.
TEST(SelectLevelTest, MonotoneOnRandomLadders) {
  auto rng = testing::make_rng(4);
  std::uniform_int_distribution<int> count(1, 20);
  std::uniform_real_distribution<double> gap(0.5, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto params = default_ladder_params();
    params.thresholds.clear();
    double t = gap(rng);
    for (int n = count(rng); n > 0; --n) {
      params.thresholds.push_back(t);
      t += gap(rng);
    }
    const auto ladder = make_ladder(params);
    int previous = 0;
    for (double v = -1.0; v < t + 5.0; v += 0.05) {
      const int level = select_level(v, ladder);
      ASSERT_GE(level, previous);
      previous = level;
    }
  }
}

TEST(SelectLevelTest, QuantizationErrorBound) {
  const auto ladder = default_ladder();
  auto rng = testing::make_rng(5);
  std::uniform_real_distribution<double> volts(66.0, 146.0);
  for (int i = 0; i < 10000; ++i) {
    const double v = volts(rng);
    const double recon = ladder.threshold(select_level(v, ladder));
    EXPECT_GE(v - recon, 0.0);
    EXPECT_LT(v - recon, 10.0);
  }
}

TEST(StepLadderTest, NoChangeWhenTargetMatches) {
  const auto ladder = default_ladder();
  const LadderState s{6, 6, 0.0};
  EXPECT_EQ(step_ladder(s, 120.0, 1e-4, ladder), s);
}

TEST(StepLadderTest, OverlapThenSettle) {
  const auto ladder = default_ladder();
  LadderState s{6, 6, 0.0};
  s = step_ladder(s, 130.0, 1e-4, ladder);
  EXPECT_TRUE(s.in_transition());
  EXPECT_EQ(conducting_set(s, ladder), (std::vector<int>{6, 7}));
  EXPECT_THROW(one_hot_word(s, ladder), OverlapError);

  // Two-step oracle: the target is select_level(130) = 7, and the overlap
  // ends once the accumulated time reaches overlap_time.
  const int target = select_level(130.0, ladder);
  double elapsed = 1e-4;
  while (elapsed < ladder.overlap_time - 1e-12) {
    s = step_ladder(s, 130.0, 1e-4, ladder);
    elapsed += 1e-4;
  }
  EXPECT_FALSE(s.in_transition());
  EXPECT_EQ(s.active_channel, target);
  EXPECT_EQ(conducting_set(s, ladder), (std::vector<int>{7}));
  EXPECT_EQ(one_hot_word(s, ladder).to_string(), "01000000");
}

TEST(StepLadderTest, CompletesInCeilOverlapOverDtSteps) {
  auto params = default_ladder_params();
  for (const auto& [overlap, dt, expected] :
       std::vector<std::tuple<double, double, int>>{{1e-3, 1e-4, 10},
                                                    {1e-3, 3e-4, 4},
                                                    {1e-3, 1e-3, 1},
                                                    {1e-3, 5e-3, 1},
                                                    {0.0, 1e-4, 1},
                                                    {2.5e-3, 1e-3, 3}}) {
    params.overlap_time = overlap;
    const auto ladder = make_ladder(params);
    LadderState s{3, 3, 0.0};
    int steps = 0;
    do {
      s = step_ladder(s, 101.0, dt, ladder);
      ++steps;
      ASSERT_LE(conducting_set(s, ladder).size(), 2U);
    } while (s.in_transition() && steps < 1000);
    EXPECT_EQ(steps, expected) << overlap << " / " << dt;
    EXPECT_EQ(s.active_channel, 4);
  }
}

TEST(StepLadderTest, MultiLevelJumpUsesSingleOverlap) {
  const auto ladder = default_ladder();
  LadderState s{2, 2, 0.0};
  s = step_ladder(s, 140.0, 1e-4, ladder);
  EXPECT_EQ(conducting_set(s, ladder), (std::vector<int>{2, 8}));
}

TEST(StepLadderTest, RetargetResetsTimer) {
  const auto ladder = default_ladder();
  LadderState s{6, 6, 0.0};
  for (int i = 0; i < 5; ++i) s = step_ladder(s, 130.0, 1e-4, ladder);
  ASSERT_TRUE(s.in_transition());
  s = step_ladder(s, 139.0, 1e-4, ladder);
  EXPECT_EQ(s.active_channel, 8);
  EXPECT_EQ(s.previous_channel, 6);
  EXPECT_NEAR(s.time_in_transition, 1e-4, 1e-15);
  // Dropping back to the channel that never turned off ends the overlap.
  s = step_ladder(s, 120.0, 1e-4, ladder);
  EXPECT_FALSE(s.in_transition());
  EXPECT_EQ(s.active_channel, 6);
}

TEST(StepLadderTest, RejectsNonPositiveDt) {
  EXPECT_THROW(step_ladder({}, 100.0, 0.0, default_ladder()), RangeError);
}

TEST(StepLadderTest, SteadyStateIsOneHot) {
  const auto ladder = default_ladder();
  auto rng = testing::make_rng(6);
  std::uniform_real_distribution<double> volts(0.0, 160.0);
  LadderState s;
  for (int i = 0; i < 2000; ++i) {
    const double v = volts(rng);
    for (int k = 0; k < 20; ++k) s = step_ladder(s, v, 1e-4, ladder);
    ASSERT_LE(conducting_set(s, ladder).size(), 1U);
    ASSERT_EQ(s.active_channel, select_level(v, ladder));
    for (int k = 0; k < 5; ++k) {
      s = step_ladder(s, v, 1e-4, ladder);
      ASSERT_LE(conducting_set(s, ladder).size(), 1U);
    }
  }
}

TEST(ConductingSetTest, Examples) {
  const auto ladder = default_ladder();
  EXPECT_EQ(conducting_set({6, 6, 0.0}, ladder), (std::vector<int>{6}));
  EXPECT_EQ(conducting_set({7, 6, 1e-4}, ladder), (std::vector<int>{6, 7}));
  EXPECT_TRUE(conducting_set({0, 0, 0.0}, ladder).empty());
  EXPECT_EQ(conducting_set({1, 0, 1e-4}, ladder), (std::vector<int>{1}));
}

TEST(RawOutputTest, Examples) {
  const auto ideal = ladder_with_drop(0.0);
  EXPECT_DOUBLE_EQ(raw_output({8, 8, 0.0}, ideal), 5.0);
  EXPECT_EQ(raw_output({0, 0, 0.0}, ideal), 0.0);
  EXPECT_DOUBLE_EQ(raw_output({4, 4, 0.0}, ideal), 2.5);
  // Overlap: the diode-OR passes the higher level.
  EXPECT_DOUBLE_EQ(raw_output({7, 6, 1e-4}, ideal), 5.0 * 7 / 8);
  EXPECT_DOUBLE_EQ(raw_output({6, 7, 1e-4}, ideal), 5.0 * 7 / 8);
}

TEST(RawOutputTest, BoundedByFullScale) {
  for (double drop : {0.0, 0.3, 0.7}) {
    const auto ladder = ladder_with_drop(drop);
    for (int a = 0; a <= 8; ++a) {
      for (int b = 0; b <= 8; ++b) {
        const LadderState s{a, b, a == b ? 0.0 : 1e-4};
        const double v = raw_output(s, ladder);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 5.0 - drop + 1e-12);
      }
    }
  }
}

TEST(OneHotWordTest, FromSteadyState) {
  const auto ladder = default_ladder();
  EXPECT_EQ(one_hot_word({3, 3, 0.0}, ladder).to_string(), "00000100");
  EXPECT_EQ(one_hot_word({0, 0, 0.0}, ladder).to_string(), "00000000");
  EXPECT_THROW(one_hot_word({7, 6, 1e-4}, ladder), OverlapError);
}

}  // namespace
}  // namespace aimq
