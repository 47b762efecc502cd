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

// Gold-rush game: every player announces a label, and players sharing a
// label form a consortium. The best eligible label class wins.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "grantgame/context.hpp"
#include "grantgame/game.hpp"
#include "grantgame/partitions.hpp"

namespace grantgame {

/// One label per player. Only the induced label classes matter.
struct Labeling {
    std::vector<int> labels;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

namespace detail {

inline void check_labeling(const Instance& inst, const Labeling& lab) {
    if (lab.labels.size() != static_cast<std::size_t>(inst.n()))
        throw GameError(ErrorCode::MalformedInput, "labeling length differs from n");
    for (int l : lab.labels)
        if (l < 0) throw GameError(ErrorCode::MalformedInput, "negative label");
}

/// Whether player i strictly prefers the winner `after` to `before`.
inline bool gains(PlayerId i, PlayerMask before, PlayerMask after) {
    if (!(after & bit(i))) return false;
    return !(before & bit(i)) || popcount(after) < popcount(before);
}

}  // namespace detail

[[nodiscard]] inline Outcome goldrush_outcome(const GameContext& ctx, const Labeling& lab) {
    detail::check_labeling(ctx.instance(), lab);
    return make_outcome(ctx.instance(), ctx.best_of(blocks_of_labels(lab.labels)));
}

[[nodiscard]] inline Outcome goldrush_outcome(const Instance& inst, const Labeling& lab) {
    detail::check_labeling(inst, lab);
    PlayerMask best = 0;
    Rational best_sum;
    for (PlayerMask g : blocks_of_labels(lab.labels)) {
        if (!is_eligible(inst, g)) continue;
        Rational s = sum_of(inst, g);
        if (best == 0 || ranks_before(s, g, best_sum, best)) {
            best = g;
            best_sum = s;
        }
    }
    return make_outcome(inst, best);
}

struct NashCheck {
    bool nash = true;
    /// Player and the label it would switch to.
    std::optional<std::pair<PlayerId, int>> witness;
};

/// A player may switch to any label held by someone else, or to a fresh one.
[[nodiscard]] inline NashCheck goldrush_is_nash(const GameContext& ctx, const Labeling& lab) {
    detail::check_labeling(ctx.instance(), lab);
    const PlayerMask before = ctx.best_of(blocks_of_labels(lab.labels));
    const int fresh = *std::max_element(lab.labels.begin(), lab.labels.end()) + 1;
    std::vector<int> trial = lab.labels;
    for (PlayerId i = 0; i < ctx.n(); ++i) {
        std::vector<int> options;
        for (PlayerId j = 0; j < ctx.n(); ++j)
            if (j != i && lab.labels[j] != lab.labels[i]) options.push_back(lab.labels[j]);
        std::sort(options.begin(), options.end());
        options.erase(std::unique(options.begin(), options.end()), options.end());
        options.push_back(fresh);
        for (int l : options) {
            trial[i] = l;
            if (detail::gains(i, before, ctx.best_of(blocks_of_labels(trial)))) return {false, std::pair{i, l}};
        }
        trial[i] = lab.labels[i];
    }
    return {};
}

[[nodiscard]] inline NashCheck goldrush_is_nash(const Instance& inst, const Labeling& lab) {
    return goldrush_is_nash(GameContext(inst), lab);
}

struct GoldrushStrongCheck {
    bool strong = true;
    std::optional<Consortium> coalition;
    /// Full labeling after the joint deviation.
    std::optional<Labeling> deviation;
};

/// Every nonempty coalition S and every joint relabelling of S: each deviator
/// either joins a label class held by non-deviators or a fresh class shared
/// only with other deviators. This covers all outcomes reachable by S.
[[nodiscard]] inline GoldrushStrongCheck goldrush_is_strong(const GameContext& ctx, const Labeling& lab) {
    detail::check_labeling(ctx.instance(), lab);
    const int n = ctx.n();
    const PlayerMask before = ctx.best_of(blocks_of_labels(lab.labels));
    const int fresh_base = *std::max_element(lab.labels.begin(), lab.labels.end()) + 1;

    for (PlayerMask s = 1; s <= ctx.all(); ++s) {
        std::vector<PlayerId> deviators;
        for_each_member(s, [&](PlayerId i) { deviators.push_back(i); });
        std::vector<int> outside_labels;
        for (PlayerId j = 0; j < n; ++j)
            if (!(s & bit(j))) outside_labels.push_back(lab.labels[j]);
        std::sort(outside_labels.begin(), outside_labels.end());
        outside_labels.erase(std::unique(outside_labels.begin(), outside_labels.end()), outside_labels.end());
        const int m = static_cast<int>(outside_labels.size());

        std::vector<int> trial = lab.labels;
        std::optional<GoldrushStrongCheck> found;
        // choice < m: adopt outside_labels[choice]; otherwise fresh class (choice - m).
        auto rec = [&](auto& self, std::size_t idx, int fresh_used) -> void {
            if (found) return;
            if (idx == deviators.size()) {
                PlayerMask after = ctx.best_of(blocks_of_labels(trial));
                bool all_gain = true;
                for (PlayerId i : deviators) all_gain = all_gain && detail::gains(i, before, after);
                if (all_gain) found = GoldrushStrongCheck{false, Consortium::from_mask(s), Labeling{trial}};
                return;
            }
            PlayerId i = deviators[idx];
            for (int c = 0; c <= m + fresh_used; ++c) {
                if (c < m) {
                    trial[i] = outside_labels[static_cast<std::size_t>(c)];
                    self(self, idx + 1, fresh_used);
                } else {
                    trial[i] = fresh_base + (c - m);
                    self(self, idx + 1, c - m == fresh_used ? fresh_used + 1 : fresh_used);
                }
                if (found) return;
            }
            trial[i] = lab.labels[i];
        };
        rec(rec, 0, 0);
        if (found) return *found;
    }
    return {};
}

[[nodiscard]] inline GoldrushStrongCheck goldrush_is_strong(const Instance& inst, const Labeling& lab) {
    return goldrush_is_strong(GameContext(inst), lab);
}

struct GoldrushReport {
    SowResult sow;
    /// Distinct Nash winners; std::nullopt stands for "no winner" and sorts first.
    std::vector<std::optional<Consortium>> nash_winners;
    /// sow.avg over the worst Nash winner's average; unset when every Nash
    /// equilibrium has no winner.
    std::optional<Rational> poa;
    bool poa_unbounded = false;
    std::size_t labelings = 0;
    std::size_t nash_equilibria = 0;
};

/// Enumerates labelings up to renaming (set partitions of the players).
[[nodiscard]] inline GoldrushReport goldrush_report(const GameContext& ctx, int limit = kDefaultEnumerationLimit) {
    detail::check_limit(ctx.instance(), limit);
    GoldrushReport rep;
    rep.sow = ctx.sow();
    std::vector<PlayerMask> winners;
    bool no_winner = false;
    PlayerMask worst = 0;
    for_each_set_partition(ctx.n(), [&](const std::vector<int>& labels) {
        ++rep.labelings;
        Labeling lab{labels};
        if (!goldrush_is_nash(ctx, lab).nash) return;
        ++rep.nash_equilibria;
        PlayerMask w = ctx.best_of(blocks_of_labels(labels));
        if (w == 0) {
            no_winner = true;
            return;
        }
        winners.push_back(w);
        if (worst == 0 || ctx.avg_greater(worst, w)) worst = w;
    });
    std::sort(winners.begin(), winners.end(), lex_less);
    winners.erase(std::unique(winners.begin(), winners.end()), winners.end());
    if (no_winner) rep.nash_winners.emplace_back(std::nullopt);
    for (PlayerMask w : winners) rep.nash_winners.emplace_back(Consortium::from_mask(w));
    if (worst == 0) rep.poa_unbounded = true;
    else rep.poa = rep.sow.avg / ctx.avg(worst);
    return rep;
}

[[nodiscard]] inline GoldrushReport goldrush_report(const Instance& inst, int limit = kDefaultEnumerationLimit) {
    detail::check_limit(inst, limit);
    return goldrush_report(GameContext(inst), limit);
}

}  // namespace grantgame
