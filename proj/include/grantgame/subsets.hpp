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

#include <optional>
#include <vector>

#include "grantgame/instance.hpp"

namespace grantgame {

namespace detail {

template <typename F>
void grow_connected(const Instance& inst, PlayerMask set, PlayerMask banned, int size, int max_size, F& visit) {
    visit(set);
    if (size == max_size) return;
    PlayerMask frontier = 0;
    for_each_member(set, [&](PlayerId i) { frontier |= inst.neighbors(i); });
    frontier &= ~set & ~banned;
    // Branch on each frontier vertex in turn: sets containing it, then sets
    // that avoid it for good.
    while (frontier != 0) {
        PlayerMask w = frontier & (~frontier + 1);
        frontier &= frontier - 1;
        grow_connected(inst, set | w, banned, size + 1, max_size, visit);
        banned |= w;
    }
}

}  // namespace detail

/// Visits every connected subset of the network exactly once, as a member
/// mask. Sets are grown from their smallest member by neighbour expansion, so
/// disconnected sets are never produced. Order: by smallest member, then DFS.
template <typename F>
void for_each_connected_subset(const Instance& inst, std::optional<int> max_size, F&& visit) {
    const int limit = max_size.value_or(inst.n());
    if (limit <= 0) return;
    for (PlayerId anchor = 0; anchor < inst.n(); ++anchor) {
        PlayerMask below = bit(anchor) - 1;
        detail::grow_connected(inst, bit(anchor), below, 1, limit, visit);
    }
}

[[nodiscard]] inline std::vector<Consortium> connected_subsets(const Instance& inst,
                                                               std::optional<int> max_size = std::nullopt) {
    if (max_size && *max_size > inst.n())
        throw GameError(ErrorCode::BadParams, "max_size exceeds player count");
    std::vector<Consortium> out;
    for_each_connected_subset(inst, max_size, [&](PlayerMask m) { out.push_back(Consortium::from_mask(m)); });
    return out;
}

/// Strict winner order shared by every protocol: higher average first, then
/// fewer members, then the lexicographically smaller member list.
[[nodiscard]] inline bool ranks_before(const Rational& sum_a, PlayerMask a, const Rational& sum_b, PlayerMask b) {
    const Rational::int_type size_a = popcount(a), size_b = popcount(b);
    Rational lhs = sum_a * Rational(size_b), rhs = sum_b * Rational(size_a);
    if (lhs != rhs) return lhs > rhs;
    if (size_a != size_b) return size_a < size_b;
    return lex_less(a, b);
}

struct SowResult {
    Consortium consortium;
    Rational avg;
    int size = 0;
};

/// Social optimum winner: maximal average over eligible consortia, then
/// minimal size, then lexicographically smallest member list.
[[nodiscard]] inline SowResult find_sow(const Instance& inst) {
    PlayerMask best = 0;
    Rational best_sum;
    for_each_connected_subset(inst, std::nullopt, [&](PlayerMask m) {
        Rational s = sum_of(inst, m);
        if (s < inst.threshold()) return;
        if (best == 0 || ranks_before(s, m, best_sum, best)) {
            best = m;
            best_sum = s;
        }
    });
    if (best == 0) throw GameError(ErrorCode::NoEligibleConsortium, "no connected set reaches the threshold");
    const int k = popcount(best);
    return {Consortium::from_mask(best), best_sum / Rational(k), k};
}

/// Hop distance from u to the nearest member of s; nullopt when unreachable.
[[nodiscard]] inline std::optional<int> distance(const Instance& inst, PlayerId u, PlayerMask s) {
    if (s & bit(u)) return 0;
    PlayerMask seen = bit(u), frontier = bit(u);
    for (int d = 1; frontier != 0; ++d) {
        PlayerMask next = 0;
        for_each_member(frontier, [&](PlayerId i) { next |= inst.neighbors(i); });
        next &= ~seen;
        if (next & s) return d;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

[[nodiscard]] inline std::optional<int> distance(const Instance& inst, PlayerId u, const Consortium& s) {
    check_members(inst, s);
    if (u < 0 || u >= inst.n()) throw GameError(ErrorCode::MalformedInput, "unknown player");
    return distance(inst, u, s.mask());
}

}  // namespace grantgame
