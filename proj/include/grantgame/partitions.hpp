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
#include <vector>

#include "grantgame/instance.hpp"

namespace grantgame {

/// Visits every set partition of {0..n-1} as a restricted growth string:
/// labels[0] == 0 and labels[i] <= 1 + max(labels[0..i-1]). Each partition
/// appears exactly once, in lexicographic order of the strings.
template <typename F>
void for_each_set_partition(int n, F&& visit) {
    if (n <= 0) return;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        visit(static_cast<const std::vector<int>&>(labels));
        int i = n - 1;
        while (i > 0 && labels[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) return;
        ++labels[i];
        prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
        for (int j = i + 1; j < n; ++j) {
            labels[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

/// Block masks of a labelling, ordered by smallest member.
[[nodiscard]] inline std::vector<PlayerMask> blocks_of_labels(const std::vector<int>& labels) {
    std::vector<PlayerMask> blocks;
    std::vector<int> slot;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int l = labels[i];
        if (l < 0) continue;
        if (static_cast<std::size_t>(l) >= slot.size()) slot.resize(static_cast<std::size_t>(l) + 1, -1);
        if (slot[static_cast<std::size_t>(l)] < 0) {
            slot[static_cast<std::size_t>(l)] = static_cast<int>(blocks.size());
            blocks.push_back(0);
        }
        blocks[static_cast<std::size_t>(slot[static_cast<std::size_t>(l)])] |= bit(static_cast<PlayerId>(i));
    }
    return blocks;
}

/// Visits every set partition of the members of `set` as a list of block masks.
template <typename F>
void for_each_partition_of(PlayerMask set, F&& visit) {
    std::vector<PlayerId> members;
    for_each_member(set, [&](PlayerId i) { members.push_back(i); });
    if (members.empty()) return;
    std::vector<PlayerMask> blocks;
    blocks.reserve(members.size());
    for_each_set_partition(static_cast<int>(members.size()), [&](const std::vector<int>& labels) {
        blocks.clear();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            auto l = static_cast<std::size_t>(labels[i]);
            if (l == blocks.size()) blocks.push_back(0);
            blocks[l] |= bit(members[i]);
        }
        visit(static_cast<const std::vector<PlayerMask>&>(blocks));
    });
}

}  // namespace grantgame
