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

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "grantgame/instance.hpp"
#include "grantgame/subsets.hpp"

namespace grantgame {

/// Largest player count for which per-subset tables are materialized.
inline constexpr int kMaxTablePlayers = 20;

/// Per-subset lookup tables for one instance: sums, induced connectivity,
/// and a total rank order over eligible consortia (rank 0 is the best under
/// ranks_before). Built once, then read-only.
class GameContext {
public:
    static constexpr std::int32_t kUnranked = std::numeric_limits<std::int32_t>::max();

    explicit GameContext(Instance inst) : inst_(std::move(inst)) {
        const int n = inst_.n();
        if (n > kMaxTablePlayers)
            throw GameError(ErrorCode::TooLarge, "subset tables need n <= " + std::to_string(kMaxTablePlayers));
        const std::size_t count = std::size_t{1} << n;
        sum_.assign(count, Rational{});
        connected_.assign(count, 0);
        rank_.assign(count, kUnranked);
        for (std::size_t m = 1; m < count; ++m) {
            const auto mask = static_cast<PlayerMask>(m);
            sum_[m] = sum_[m & (m - 1)] + inst_.value(lowest(mask));
        }
        for_each_connected_subset(inst_, std::nullopt, [&](PlayerMask m) {
            connected_[m] = 1;
            if (sum_[m] >= inst_.threshold()) eligible_.push_back(m);
        });
        std::sort(eligible_.begin(), eligible_.end(),
                  [&](PlayerMask a, PlayerMask b) { return ranks_before(sum_[a], a, sum_[b], b); });
        for (std::size_t r = 0; r < eligible_.size(); ++r) rank_[eligible_[r]] = static_cast<std::int32_t>(r);
    }

    [[nodiscard]] const Instance& instance() const noexcept { return inst_; }
    [[nodiscard]] int n() const noexcept { return inst_.n(); }
    [[nodiscard]] PlayerMask all() const noexcept { return inst_.all_players(); }

    [[nodiscard]] const Rational& sum(PlayerMask m) const { return sum_[m]; }
    [[nodiscard]] Rational avg(PlayerMask m) const { return sum_[m] / Rational(popcount(m)); }
    [[nodiscard]] bool connected(PlayerMask m) const { return connected_[m] != 0; }
    [[nodiscard]] bool eligible(PlayerMask m) const { return rank_[m] != kUnranked; }
    /// Position in the winner order; kUnranked for ineligible sets.
    [[nodiscard]] std::int32_t rank(PlayerMask m) const { return rank_[m]; }

    /// Eligible consortia, best first.
    [[nodiscard]] const std::vector<PlayerMask>& eligible_sets() const noexcept { return eligible_; }

    /// avg(a) > avg(b), exactly.
    [[nodiscard]] bool avg_greater(PlayerMask a, PlayerMask b) const {
        return sum_[a] * Rational(popcount(b)) > sum_[b] * Rational(popcount(a));
    }

    /// Best eligible member of `blocks`, or 0 when none is eligible.
    template <typename Range>
    [[nodiscard]] PlayerMask best_of(const Range& blocks) const {
        PlayerMask best = 0;
        std::int32_t best_rank = kUnranked;
        for (PlayerMask b : blocks) {
            if (rank_[b] < best_rank) {
                best_rank = rank_[b];
                best = b;
            }
        }
        return best;
    }

    [[nodiscard]] SowResult sow() const {
        if (eligible_.empty())
            throw GameError(ErrorCode::NoEligibleConsortium, "no connected set reaches the threshold");
        PlayerMask m = eligible_.front();
        return {Consortium::from_mask(m), avg(m), popcount(m)};
    }

private:
    Instance inst_;
    std::vector<Rational> sum_;
    std::vector<std::uint8_t> connected_;
    std::vector<std::int32_t> rank_;
    std::vector<PlayerMask> eligible_;
};

}  // namespace grantgame
