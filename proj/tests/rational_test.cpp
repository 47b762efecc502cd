// Copyright 2026 The grantgame Authors
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

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "grantgame/rational.hpp"

using grantgame::Rational;

TEST(Rational, NormalizesSignAndLowestTerms) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, 5).den(), 1);
    EXPECT_EQ(Rational(10, 5), Rational(2));
}

TEST(Rational, ArithmeticIsExact) {
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(47, 3) / Rational(10), Rational(47, 30));
}

TEST(Rational, OrderingIsExact) {
    EXPECT_LT(Rational(1, 3), Rational(334, 1000));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(13, 3) <=> Rational(26, 6), std::strong_ordering::equal);
}

TEST(Rational, ParsesAndPrints) {
    EXPECT_EQ(Rational::parse("47/30"), Rational(47, 30));
    EXPECT_EQ(Rational::parse("-8/6"), Rational(-4, 3));
    EXPECT_EQ(Rational::parse(" 12 "), Rational(12));
    EXPECT_EQ(Rational(47, 30).str(), "47/30");
    EXPECT_EQ(Rational(4).str(), "4");
    EXPECT_EQ(Rational(-1, 2).str(), "-1/2");
    EXPECT_THROW((void)Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW((void)Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW((void)Rational::parse(""), std::invalid_argument);
}

TEST(Rational, DivisionByZeroAndOverflowThrow) {
    EXPECT_THROW((void)(Rational(1) / Rational(0)), std::domain_error);
    const auto big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW((void)(Rational(big) * Rational(big)), std::overflow_error);
    EXPECT_THROW((void)(Rational(big) + Rational(1)), std::overflow_error);
}

TEST(RationalProperty, FieldLawsOnRandomValues) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
        EXPECT_EQ(a < b, a.to_double() < b.to_double() && a != b);
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}
