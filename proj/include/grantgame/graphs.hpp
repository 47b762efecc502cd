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
#include <numeric>
#include <vector>

#include "grantgame/instance.hpp"

namespace grantgame {

/// Largest n for which connected_graphs() enumerates isomorphism classes.
inline constexpr int kMaxEnumeratedGraphOrder = 6;

namespace detail {

inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return pairs;
}

inline bool edge_mask_connected(int n, const std::vector<Edge>& pairs, std::uint32_t mask) {
    std::vector<PlayerMask> adj(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (!(mask & (std::uint32_t{1} << e))) continue;
        adj[static_cast<std::size_t>(pairs[e].first)] |= bit(pairs[e].second);
        adj[static_cast<std::size_t>(pairs[e].second)] |= bit(pairs[e].first);
    }
    PlayerMask seen = 1, frontier = 1;
    while (frontier) {
        PlayerMask next = 0;
        for_each_member(frontier, [&](PlayerId i) { next |= adj[static_cast<std::size_t>(i)]; });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask(n);
}

}  // namespace detail

/// One representative edge list per isomorphism class of connected simple
/// graphs on n vertices (the representative with the smallest edge bitmask
/// over the lexicographic pair order). Sorted by that bitmask.
[[nodiscard]] inline std::vector<std::vector<Edge>> connected_graphs(int n) {
    if (n < 1 || n > kMaxEnumeratedGraphOrder)
        throw GameError(ErrorCode::TooLarge, "graph enumeration supports 1 <= n <= 6");
    const auto pairs = detail::all_pairs(n);
    std::vector<int> pair_index(static_cast<std::size_t>(n * n), -1);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        pair_index[static_cast<std::size_t>(pairs[e].first * n + pairs[e].second)] = static_cast<int>(e);
        pair_index[static_cast<std::size_t>(pairs[e].second * n + pairs[e].first)] = static_cast<int>(e);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    const std::uint32_t count = std::uint32_t{1} << pairs.size();
    std::vector<std::uint8_t> seen(count, 0);
    std::vector<std::vector<Edge>> out;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        if (seen[mask] || !detail::edge_mask_connected(n, pairs, mask)) continue;
        // Ascending scan: the first unseen member of an orbit is its minimum.
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask & (std::uint32_t{1} << e)) edges.push_back(pairs[e]);
        out.push_back(edges);
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (auto [a, b] : edges)
                image |= std::uint32_t{1}
                         << pair_index[static_cast<std::size_t>(p[static_cast<std::size_t>(a)] * n +
                                                                p[static_cast<std::size_t>(b)])];
            seen[image] = 1;
        }
    }
    return out;
}

}  // namespace grantgame
