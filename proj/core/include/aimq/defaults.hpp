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

// Reference configuration. Every default used by the library and the CLI is
// defined here; bump kDefaultsVersion whenever a value changes.

#include <array>
#include <cstdint>

namespace aimq::defaults {

inline constexpr const char* kDefaultsVersion = "1";

// Ladder: 66 V minimum channel, 10 V spacing up to 136 V.
inline constexpr int kChannelCount = 8;
inline constexpr double kMinThreshold = 66.0;
inline constexpr double kThresholdSpacing = 10.0;
inline constexpr double kAdcMax = 5.0;
inline constexpr double kDiodeDrop = 0.3;
inline constexpr double kOverlapTime = 1e-3;
inline constexpr double kZenerDynamicResistance = 10.0;

// Optocoupler drive. I_f is a calibrated value, not a published one.
inline constexpr double kForwardCurrent = 1e-3;
inline constexpr double kCurrentTransferRatio = 1.0;
inline constexpr double kTransistorBeta = 100.0;

// Parent-board Sallen-Key filter.
inline constexpr double kFilterCrossoverHz = 16.0;
inline constexpr double kFilterGain = 1.1;
inline constexpr double kFilterQ = 0.5;

// Engine.
inline constexpr double kEngineDt = 1e-4;
inline constexpr double kReconstructionScale = 40.0;
inline constexpr double kSettlingWindow = 0.5;

// Random-walk bus experiment.
inline constexpr double kBusStart = 100.0;
inline constexpr int kBusSteps = 1000;
inline constexpr double kSampleInterval = 10e-3;
inline constexpr std::uint64_t kSeed = 42;

// Isolation-amplifier comparison inputs.
inline constexpr double kCompareVPri = 120.0;
inline constexpr double kCompareIb = 100e-9;
inline constexpr double kCompareVIso = 5.0;
inline constexpr double kCompareIPri = 100e-9;
inline constexpr double kCompareEta = 0.6;
inline constexpr double kCompareIzf = 100e-9;
// Secondary terms are neglected in the reference comparison (V_sec * I_sec
// taken as zero); pass nonzero currents to evaluate the full quotient.
inline constexpr double kCompareVSec = 5.0;
inline constexpr double kCompareISec = 0.0;
inline constexpr double kCompareIOut = 0.0;

}  // namespace aimq::defaults
