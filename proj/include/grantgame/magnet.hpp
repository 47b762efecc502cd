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

// MAGNET: a CCC round followed by appeal rounds. In each appeal round every
// outside set X with X + W connected and avg(X + W) > avg(W) is absorbed,
// each tested against the round's starting winner W. Rounds repeat until no
// appeal is accepted. Appeals are automatic: an outsider always gains from
// joining the winner.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "grantgame/ccc.hpp"
#include "grantgame/context.hpp"
#include "grantgame/game.hpp"

namespace grantgame {

namespace detail {

/// Appeals accepted against `w` in one round, as masks, in subset order.
template <typename F>
void for_each_accepted_appeal(const GameContext& ctx, PlayerMask w, F&& visit) {
    const PlayerMask outside = ctx.all() & ~w;
    const Rational w_size(popcount(w));
    const Rational& w_sum = ctx.sum(w);
    for (PlayerMask x = outside; x != 0; x = (x - 1) & outside) {
        if (!ctx.connected(x | w)) continue;
        // avg(X + W) > avg(W)  <=>  avg(X) > avg(W) for disjoint X, W
        if (ctx.sum(x) * w_size > w_sum * Rational(popcount(x))) visit(x);
    }
}

inline PlayerMask appeal_round(const GameContext& ctx, PlayerMask w) {
    PlayerMask grown = w;
    for_each_accepted_appeal(ctx, w, [&](PlayerMask x) { grown |= x; });
    return grown;
}

}  // namespace detail

/// Game context plus the memoized closure of every eligible consortium.
class MagnetContext {
public:
    explicit MagnetContext(Instance inst) : MagnetContext(GameContext(std::move(inst))) {}
    explicit MagnetContext(GameContext ctx) : ctx_(std::move(ctx)) {
        closure_.assign(std::size_t{1} << ctx_.n(), 0);
        for (PlayerMask e : ctx_.eligible_sets()) close(e);
    }

    [[nodiscard]] const GameContext& game() const noexcept { return ctx_; }
    [[nodiscard]] const Instance& instance() const noexcept { return ctx_.instance(); }

    /// Final winner reached from round-1 winner `w` (must be eligible).
    [[nodiscard]] PlayerMask closure(PlayerMask w) const { return closure_[w]; }

private:
    PlayerMask close(PlayerMask w) {
        if (closure_[w]) return closure_[w];
        PlayerMask next = detail::appeal_round(ctx_, w);
        closure_[w] = next == w ? w : close(next);
        return closure_[w];
    }

    GameContext ctx_;
    std::vector<PlayerMask> closure_;
};

struct ClosureResult {
    Consortium final;
    ClosureTrace trace;
};

[[nodiscard]] inline ClosureResult magnet_closure(const GameContext& ctx, const Consortium& w1) {
    check_members(ctx.instance(), w1);
    PlayerMask w = w1.mask();
    if (!ctx.eligible(w)) throw GameError(ErrorCode::IneligibleStart, w1.str() + " is not eligible");
    ClosureTrace trace;
    while (true) {
        ClosureRound round{Consortium::from_mask(w), {}, {}};
        PlayerMask grown = w;
        detail::for_each_accepted_appeal(ctx, w, [&](PlayerMask x) {
            round.accepted_appeals.push_back(Consortium::from_mask(x));
            grown |= x;
        });
        std::sort(round.accepted_appeals.begin(), round.accepted_appeals.end());
        round.winner_after = Consortium::from_mask(grown);
        trace.rounds.push_back(std::move(round));
        if (grown == w) break;
        w = grown;
    }
    return {Consortium::from_mask(w), std::move(trace)};
}

[[nodiscard]] inline ClosureResult magnet_closure(const Instance& inst, const Consortium& w1) {
    return magnet_closure(GameContext(inst), w1);
}

struct MagnetOutcome {
    Outcome outcome;
    std::optional<ClosureTrace> trace;
};

[[nodiscard]] inline MagnetOutcome magnet_outcome(const GameContext& ctx, const ProposalProfile& p) {
    auto w1 = ccc_winner(ctx.instance(), p);
    if (!w1) return {make_outcome(ctx.instance(), 0), std::nullopt};
    auto closed = magnet_closure(ctx, *w1);
    return {make_outcome(ctx.instance(), closed.final.mask()), std::move(closed.trace)};
}

[[nodiscard]] inline MagnetOutcome magnet_outcome(const Instance& inst, const ProposalProfile& p) {
    return magnet_outcome(GameContext(inst), p);
}

[[nodiscard]] inline StrongCheck magnet_is_strong(const MagnetContext& mctx, const ProposalProfile& p) {
    auto blocks = detail::eligible_blocks(mctx.game(), p);
    auto dev = detail::find_deviation(mctx.game(), blocks, [&](PlayerMask w) { return mctx.closure(w); });
    if (!dev) return {};
    return {false, detail::to_deviation(*dev)};
}

[[nodiscard]] inline StrongCheck magnet_is_strong(const Instance& inst, const ProposalProfile& p) {
    return magnet_is_strong(MagnetContext(inst), p);
}

[[nodiscard]] inline EquilibriumReport magnet_report(const MagnetContext& mctx, int limit = kDefaultEnumerationLimit) {
    detail::check_limit(mctx.instance(), limit);
    const GameContext& ctx = mctx.game();
    auto raw = detail::enumerate_equilibria(ctx, [&](PlayerMask w) { return mctx.closure(w); });
    auto rep = detail::to_report(ctx, raw);
    for (PlayerMask w1 : raw.first_round) rep.traces.push_back(magnet_closure(ctx, Consortium::from_mask(w1)).trace);
    return rep;
}

[[nodiscard]] inline EquilibriumReport magnet_report(const Instance& inst, int limit = kDefaultEnumerationLimit) {
    detail::check_limit(inst, limit);
    return magnet_report(MagnetContext(inst), limit);
}

}  // namespace grantgame
