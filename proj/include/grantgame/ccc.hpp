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

// Consensual Consortium Composition: a block can win only if every member
// proposed exactly that block. The best eligible block wins.

#include <optional>

#include "grantgame/context.hpp"
#include "grantgame/game.hpp"

namespace grantgame {

namespace detail {
inline constexpr auto identity_final = [](PlayerMask w) { return w; };
}

[[nodiscard]] inline std::optional<Consortium> ccc_winner(const Instance& inst, const ProposalProfile& p) {
    if (p.n() != inst.n()) throw GameError(ErrorCode::MalformedInput, "profile size differs from instance");
    PlayerMask best = 0;
    Rational best_sum;
    for (PlayerMask b : p.blocks()) {
        if (!is_eligible(inst, b)) continue;
        Rational s = sum_of(inst, b);
        if (best == 0 || ranks_before(s, b, best_sum, best)) {
            best = b;
            best_sum = s;
        }
    }
    if (best == 0) return std::nullopt;
    return Consortium::from_mask(best);
}

[[nodiscard]] inline Outcome ccc_outcome(const Instance& inst, const ProposalProfile& p) {
    auto w = ccc_winner(inst, p);
    return make_outcome(inst, w ? w->mask() : 0);
}

[[nodiscard]] inline StrongCheck ccc_is_strong(const GameContext& ctx, const ProposalProfile& p) {
    auto blocks = detail::eligible_blocks(ctx, p);
    auto dev = detail::find_deviation(ctx, blocks, detail::identity_final);
    if (!dev) return {};
    return {false, detail::to_deviation(*dev)};
}

[[nodiscard]] inline StrongCheck ccc_is_strong(const Instance& inst, const ProposalProfile& p) {
    return ccc_is_strong(GameContext(inst), p);
}

/// Enumerates all strong equilibria (up to outcome equivalence) and the
/// resulting strong price of anarchy and of stability.
[[nodiscard]] inline EquilibriumReport ccc_report(const GameContext& ctx, int limit = kDefaultEnumerationLimit) {
    detail::check_limit(ctx.instance(), limit);
    return detail::to_report(ctx, detail::enumerate_equilibria(ctx, detail::identity_final));
}

[[nodiscard]] inline EquilibriumReport ccc_report(const Instance& inst, int limit = kDefaultEnumerationLimit) {
    detail::check_limit(inst, limit);
    return ccc_report(GameContext(inst), limit);
}

}  // namespace grantgame
