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

#include <stdexcept>
#include <string>

namespace aimq {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value outside its documented domain (level index, word width, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

// A one-hot word with more than one bit set.
class MalformedWordError : public Error {
 public:
  using Error::Error;
};

// Requested a one-hot view of the ladder while two channels conduct.
class OverlapError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: ladder, filter design, budget or simulation setup.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace aimq
