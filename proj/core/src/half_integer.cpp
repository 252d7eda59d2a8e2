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

#include "dicke4/half_integer.hpp"

#include <charconv>
#include <stdexcept>

namespace dicke4 {

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

HalfInteger parse_half_integer(const std::string& text) {
  const std::string_view s(text);
  int value = 0;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    int den = 0;
    if (!parse_int(s.substr(0, slash), value) || !parse_int(s.substr(slash + 1), den) ||
        (den != 1 && den != 2)) {
      throw std::invalid_argument("not a half-integer: " + text);
    }
    return HalfInteger::from_twice(den == 1 ? 2 * value : value);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto frac = s.substr(dot + 1);
    const auto whole = s.substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    if (whole == "-" || whole.empty()) {
      value = 0;
    } else if (!parse_int(whole, value)) {
      throw std::invalid_argument("not a half-integer: " + text);
    }
    const auto trimmed = frac.substr(0, frac.find_last_not_of('0') + 1);
    int twice = 2 * value;
    if (trimmed == "5") {
      twice += negative ? -1 : 1;
    } else if (!(trimmed.empty() || frac.find_first_not_of('0') == std::string_view::npos)) {
      throw std::invalid_argument("not a half-integer: " + text);
    }
    return HalfInteger::from_twice(twice);
  }
  if (!parse_int(s, value)) throw std::invalid_argument("not a half-integer: " + text);
  return HalfInteger(value);
}

}  // namespace dicke4
