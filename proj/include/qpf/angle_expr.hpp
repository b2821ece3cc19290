// Copyright 2026 The qpf Authors
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

// Angle expressions: plain radians or rational multiples of pi.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | primary
//   primary := number ['pi'] | 'pi' | '(' expr ')' ['pi']
//
// Examples: 0.5, 2pi/3, -pi/2, 11*pi/6, (1+1)pi/9, 1e-3.

#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "qpf/core.hpp"

namespace qpf {

namespace detail {

class AngleParser {
 public:
  explicit AngleParser(std::string_view text) : s_(text) {}

  double parse() {
    const double v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    require_finite(v, "angle");
    return v;
  }

 private:
  double expr() {
    double v = term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const double d = unary();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double unary() {
    skip_ws();
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  double primary() {
    skip_ws();
    double v = 0.0;
    if (eat('(')) {
      v = expr();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
    } else if (eat_word("pi")) {
      return kPi;
    } else {
      v = number();
    }
    skip_ws();
    if (eat_word("pi")) v *= kPi;
    return v;
  }

  double number() {
    const size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == 'e' || s_[pos_] == 'E' ||
            ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
             (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a number, 'pi' or '('");
    const std::string token(s_.substr(start, pos_ - start));
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      fail("bad number '" + token + "'");
    }
    if (used != token.size()) fail("bad number '" + token + "'");
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad angle '" + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Parses an angle in radians; see the grammar at the top of this file.
inline double parse_angle(std::string_view text) {
  return detail::AngleParser(text).parse();
}

}  // namespace qpf
