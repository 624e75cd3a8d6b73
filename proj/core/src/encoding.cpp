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

#include "aimq/encoding.hpp"

#include <algorithm>
#include <bit>

#include "aimq/errors.hpp"

namespace aimq {

namespace {

std::uint64_t width_mask(int width) {
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void check_width(int width) {
  if (width < 1 || width > OneHotWord::kMaxWidth) {
    throw RangeError("word width must be in 1..64, got " +
                     std::to_string(width));
  }
}

}  // namespace

OneHotWord::OneHotWord(std::uint64_t bits, int width)
    : bits_(bits), width_(width) {
  check_width(width);
  if ((bits & ~width_mask(width)) != 0) {
    throw RangeError("bits exceed word width " + std::to_string(width));
  }
}

OneHotWord OneHotWord::from_string(std::string_view text) {
  if (text.empty() || text.size() > kMaxWidth) {
    throw ParseError("bad one-hot word length", 0);
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("one-hot word must contain only 0 and 1", 0);
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return OneHotWord(bits, static_cast<int>(text.size()));
}

int OneHotWord::popcount() const { return std::popcount(bits_); }

std::string OneHotWord::to_string() const {
  std::string out(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if ((bits_ >> i) & 1U) out[static_cast<std::size_t>(width_ - 1 - i)] = '1';
  }
  return out;
}

OneHotWord one_hot_encode(int level, int width) {
  check_width(width);
  if (level < 0 || level > width) {
    throw RangeError("level " + std::to_string(level) + " outside 0.." +
                     std::to_string(width));
  }
  if (level == 0) return OneHotWord(0, width);
  return OneHotWord(std::uint64_t{1} << (level - 1), width);
}

int one_hot_decode(const OneHotWord& word) {
  if (word.bits() == 0) return 0;
  if (!word.is_one_hot()) {
    throw MalformedWordError("word " + word.to_string() +
                             " has more than one bit set");
  }
  return std::countr_zero(word.bits()) + 1;
}

std::string binary_label(int level, int width) {
  check_width(width);
  if (level < 0) throw RangeError("negative level");
  const auto pad = std::max(1, static_cast<int>(std::bit_width(
                                   static_cast<unsigned>(width - 1))));
  const auto needed =
      std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(level))));
  const int digits = std::max(pad, needed);
  std::string out(static_cast<std::size_t>(digits), '0');
  for (int i = 0; i < digits; ++i) {
    if ((level >> i) & 1) out[static_cast<std::size_t>(digits - 1 - i)] = '1';
  }
  return out;
}

}  // namespace aimq
