// Copyright 2026 The dicke4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DICKE4_HALF_INTEGER_HPP_
#define DICKE4_HALF_INTEGER_HPP_

#include <compare>
#include <cstdint>
#include <string>

namespace dicke4 {

/// Exact half-integer value, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr HalfInteger(int value) : twice_(2 * value) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  /// Exact value of numerator/2.
  static constexpr HalfInteger half(int numerator) { return from_twice(numerator); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double to_double() const { return 0.5 * twice_; }

  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  constexpr HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInteger& operator-=(HalfInteger o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return a -= b; }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  /// "3/2", "-1/2", "2", "0".
  std::string to_string() const;

 private:
  int twice_ = 0;
};

/// Parses "3/2", "-1", "0.5", "-1.5".  Throws std::invalid_argument.
HalfInteger parse_half_integer(const std::string& text);

}  // namespace dicke4

#endif  // DICKE4_HALF_INTEGER_HPP_
