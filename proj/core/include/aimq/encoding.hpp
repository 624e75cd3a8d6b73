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
#include <string>
#include <string_view>

namespace aimq {

// An N-bit channel word. Bit 0 is the lowest-voltage channel. A well-formed
// word has at most one bit set; all zeros encodes level 0. The type can hold
// arbitrary bit patterns so that overlap states can be represented and
// rejected by one_hot_decode().
class OneHotWord {
 public:
  static constexpr int kMaxWidth = 64;

  // Throws RangeError unless 1 <= width <= kMaxWidth and `bits` fits.
  OneHotWord(std::uint64_t bits, int width);

  // Parses an MSB-first string of '0'/'1' characters.
  static OneHotWord from_string(std::string_view text);

  std::uint64_t bits() const { return bits_; }
  int width() const { return width_; }
  int popcount() const;
  bool is_one_hot() const { return popcount() <= 1; }

  // MSB-first rendering, e.g. "00000100".
  std::string to_string() const;

  friend bool operator==(const OneHotWord&, const OneHotWord&) = default;

 private:
  std::uint64_t bits_;
  int width_;
};

// level 0 -> all zeros; level k -> bit (k - 1). Throws RangeError when
// level is outside 0..width.
OneHotWord one_hot_encode(int level, int width);

// Inverse of one_hot_encode. Throws MalformedWordError for two or more bits.
int one_hot_decode(const OneHotWord& word);

// Plain binary rendering of `level`, zero-padded to the number of bits needed
// for width - 1 (so N = 8 gives "011" for 3 and "1000" for 8).
std::string binary_label(int level, int width);

}  // namespace aimq
