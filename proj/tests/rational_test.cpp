// Copyright 2026 The toruspenny Authors
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

#include "toruspenny/rational.hpp"

#include <gtest/gtest.h>

#include "toruspenny/error.hpp"

namespace toruspenny {
namespace {

TEST(RationalTest, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("13/36"), Rational(13, 36));
  EXPECT_EQ(parse_rational(" -2/4 "), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("007/010"), Rational(7, 10));
  EXPECT_EQ(parse_rational("0.0625"), Rational(1, 16));
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1//2", "0.5.1", "1/2x", "--1", "3/-9"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(RationalTest, FormatsInLowestTerms) {
  EXPECT_EQ(to_string(Rational(200, 1296)), "25/162");
  EXPECT_EQ(to_string(Rational(-6, 3)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(RationalTest, FloorRoundsTowardNegativeInfinity) {
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(floor(Rational(-4)), -4);
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 5)), 0.2);
}

TEST(RationalTest, RoundTripsThroughText) {
  for (int p = -40; p <= 40; p += 7) {
    for (int q = 1; q < 50; q += 6) {
      const Rational r(p, q);
      EXPECT_EQ(parse_rational(to_string(r)), r);
    }
  }
}

}  // namespace
}  // namespace toruspenny
