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

#include "reference.hpp"
#include "test_util.hpp"

using namespace grantgame;
using namespace gg_test;

TEST(ValidateInstance, AcceptsTwoPlayers) {
    Instance inst = validate_instance({2, {{0, 1}}, vals({3, 5}), R(7), R(1)});
    EXPECT_EQ(inst.n(), 2);
    EXPECT_EQ(inst.value(1), R(5));
}

TEST(ValidateInstance, TotalMustExceedThreshold) {
    // The total has to be strictly larger than T, so a sum equal to T fails.
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{0, 1}}, vals({3, 4}), R(7), R(1)}); }),
              ErrorCode::InsufficientTotal);
}

TEST(ValidateInstance, ReportsEachViolation) {
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{0, 1}}, vals({7, 1}), R(7), R(1)}); }),
              ErrorCode::DominantPlayer);
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{0, 1}}, vals({2, 2}), R(7), R(1)}); }),
              ErrorCode::InsufficientTotal);
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{0, 2}}, vals({3, 5}), R(7), R(1)}); }),
              ErrorCode::MalformedGraph);
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{1, 1}}, vals({3, 5}), R(7), R(1)}); }),
              ErrorCode::MalformedGraph);
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{0, 1}, {1, 0}}, vals({3, 5}), R(7), R(1)}); }),
              ErrorCode::MalformedGraph);
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{0, 1}}, vals({3, 5}), R(0), R(1)}); }),
              ErrorCode::NonPositiveParameter);
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{0, 1}}, vals({3, 5}), R(7), R(0)}); }),
              ErrorCode::NonPositiveParameter);
    EXPECT_EQ(error_of([] { (void)validate_instance({2, {{0, 1}}, vals({-1, 5}), R(7), R(1)}); }),
              ErrorCode::NonPositiveParameter);
}

TEST(ValidateInstance, NormalizesEdgeOrder) {
    Instance inst = validate_instance({3, {{2, 1}, {1, 0}}, vals({3, 4, 1}), R(7), R(1)});
    EXPECT_EQ(inst.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Consortium, IsCanonical) {
    Consortium a{3, 1, 1, 2};
    EXPECT_EQ(a, (Consortium{1, 2, 3}));
    EXPECT_EQ(a.str(), "{1,2,3}");
    EXPECT_EQ(Consortium::from_mask(a.mask()), a);
    EXPECT_THROW(Consortium(std::vector<PlayerId>{}), GameError);
}

TEST(IsConnected, LineAndClique) {
    Instance l = line({6, 0, 6}, 10);
    EXPECT_FALSE(is_connected(l, Consortium{0, 2}));
    EXPECT_TRUE(is_connected(l, Consortium{0, 1, 2}));
    EXPECT_TRUE(is_connected(l, Consortium{1}));
    Instance k = clique({5, 5, 5, 3}, 12);
    for (PlayerMask m = 1; m < 16; ++m) EXPECT_TRUE(is_connected(k, m));
}

TEST(Evaluate, SumsAndAverages) {
    Instance k = clique({5, 5, 5, 3}, 12);
    auto e = evaluate(k, Consortium{0, 1, 3});
    EXPECT_EQ(e.sum, R(13));
    EXPECT_EQ(e.avg, R(13, 3));
    EXPECT_EQ(evaluate(k, Consortium{3}).avg, R(3));
    auto all = evaluate(line30(), Consortium{0, 1, 2, 3, 4});
    EXPECT_EQ(all.sum, R(50));
    EXPECT_EQ(all.avg, R(10));
}

TEST(IsEligible, ThresholdAndConnectivity) {
    Instance k = clique({5, 5, 5, 3}, 12);
    EXPECT_TRUE(is_eligible(k, Consortium{0, 1, 2}));
    EXPECT_FALSE(is_eligible(k, Consortium{0, 3}));
    // Superset of an eligible sum that is disconnected.
    EXPECT_FALSE(is_eligible(line({6, 0, 6}, 10), Consortium{0, 2}));
    EXPECT_TRUE(is_eligible(line({6, 0, 6}, 10), Consortium{0, 1, 2}));
}

TEST(InstanceProperty, NoSingletonIsEligible) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Instance inst = ref::random_instance(rng, 2, 6);
        for (PlayerId i = 0; i < inst.n(); ++i) EXPECT_FALSE(is_eligible(inst, bit(i)));
        for (PlayerMask m = 1; m <= inst.all_players(); ++m) {
            auto e = evaluate(inst, Consortium::from_mask(m));
            EXPECT_EQ(e.avg * Rational(popcount(m)), e.sum);
        }
    }
}
