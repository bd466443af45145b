// Copyright 2026 The bidi Authors
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

#ifndef BIDI_SIGN_HPP
#define BIDI_SIGN_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace bidi {

/// An element of the sign group {+, -}.
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Plus : Sign::Minus;
}

constexpr Sign& operator*=(Sign& a, Sign b) noexcept { return a = a * b; }

constexpr Sign operator-(Sign a) noexcept {
  return a == Sign::Plus ? Sign::Minus : Sign::Plus;
}

constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

constexpr std::optional<Sign> sign_from_char(char c) noexcept {
  if (c == '+') return Sign::Plus;
  if (c == '-') return Sign::Minus;
  return std::nullopt;
}

/// (-1)^k as a sign.
constexpr Sign parity_sign(std::size_t k) noexcept {
  return k % 2 == 0 ? Sign::Plus : Sign::Minus;
}

inline std::ostream& operator<<(std::ostream& os, Sign s) {
  return os << to_char(s);
}

/// Space-separated rendering, e.g. "+ - -".
inline std::string to_string(std::span<const Sign> signs) {
  std::string out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ' ';
    out += to_char(signs[i]);
  }
  return out;
}

}  // namespace bidi

#endif  // BIDI_SIGN_HPP
