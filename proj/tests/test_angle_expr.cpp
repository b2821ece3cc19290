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

#include <gtest/gtest.h>

#include "qpf/angle_expr.hpp"

namespace qpf {
namespace {

TEST(ParseAngle, PlainNumbers) {
  EXPECT_EQ(parse_angle("0.5"), 0.5);
  EXPECT_EQ(parse_angle("-1e-3"), -1e-3);
  EXPECT_EQ(parse_angle("2.0943951023931953"), 2.0943951023931953);
}

TEST(ParseAngle, PiExpressions) {
  EXPECT_EQ(parse_angle("pi"), kPi);
  EXPECT_EQ(parse_angle("2pi/3"), 2.0 * kPi / 3.0);
  EXPECT_EQ(parse_angle("-pi/2"), -kPi / 2.0);
  EXPECT_EQ(parse_angle("11*pi/6"), 11.0 * kPi / 6.0);
  EXPECT_EQ(parse_angle("(1+1)pi/9"), 2.0 * kPi / 9.0);
  EXPECT_EQ(parse_angle(" 2 pi / 3 "), 2.0 * kPi / 3.0);
}

TEST(ParseAngle, Errors) {
  for (const char* bad : {"", "pi/", "2pi/0", "abc", "(pi", "1..2", "pi pi", "nan", "1e999"}) {
    EXPECT_THROW(parse_angle(bad), ParseError) << bad;
  }
}

}  // namespace
}  // namespace qpf
