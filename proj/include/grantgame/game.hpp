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

// Shared machinery for the proposal games (CCC and MAGNET): proposal
// profiles, outcomes, and the coalition-deviation search.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "grantgame/context.hpp"
#include "grantgame/instance.hpp"
#include "grantgame/partitions.hpp"

namespace grantgame {

/// Default bound on n for exhaustive equilibrium enumeration.
inline constexpr int kDefaultEnumerationLimit = 6;

/// Round-1 strategy state: a partition of the players into proposed blocks.
/// Every player proposes its own block, so every block is consistent.
/// Canonical form: blocks ordered by smallest member.
class ProposalProfile {
public:
    ProposalProfile() = default;

    static ProposalProfile from_blocks(int n, std::vector<PlayerMask> blocks) {
        if (n < 1 || n > kMaxPlayers) throw GameError(ErrorCode::MalformedInput, "bad player count");
        PlayerMask covered = 0;
        for (PlayerMask b : blocks) {
            if (b == 0) throw GameError(ErrorCode::MalformedInput, "empty block in profile");
            if (b & covered) throw GameError(ErrorCode::MalformedInput, "blocks overlap");
            covered |= b;
        }
        if (covered != full_mask(n)) throw GameError(ErrorCode::MalformedInput, "blocks do not cover every player");
        std::sort(blocks.begin(), blocks.end(), [](PlayerMask a, PlayerMask b) { return lowest(a) < lowest(b); });
        ProposalProfile p;
        p.n_ = n;
        p.blocks_ = std::move(blocks);
        return p;
    }

    static ProposalProfile from_consortia(int n, const std::vector<Consortium>& blocks) {
        std::vector<PlayerMask> masks;
        for (const auto& c : blocks) masks.push_back(c.mask());
        return from_blocks(n, std::move(masks));
    }

    /// The given blocks, with every uncovered player proposing alone.
    static ProposalProfile with_singletons(int n, std::vector<PlayerMask> blocks) {
        PlayerMask covered = 0;
        for (PlayerMask b : blocks) covered |= b;
        for_each_member(full_mask(n) & ~covered, [&](PlayerId i) { blocks.push_back(bit(i)); });
        return from_blocks(n, std::move(blocks));
    }

    static ProposalProfile singletons(int n) { return with_singletons(n, {}); }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<PlayerMask>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] std::vector<Consortium> consortia() const {
        std::vector<Consortium> out;
        for (PlayerMask b : blocks_) out.push_back(Consortium::from_mask(b));
        return out;
    }
    [[nodiscard]] std::string str() const {
        std::string s;
        for (PlayerMask b : blocks_) s += Consortium::from_mask(b).str();
        return s;
    }

    friend bool operator==(const ProposalProfile&, const ProposalProfile&) = default;

private:
    int n_ = 0;
    std::vector<PlayerMask> blocks_;
};

/// Winner (if any) and per-player utilities: M/|winner| for winners, 0 otherwise.
struct Outcome {
    std::optional<Consortium> winner;
    std::vector<Rational> utilities;
};

[[nodiscard]] inline Outcome make_outcome(const Instance& inst, PlayerMask winner) {
    Outcome out;
    out.utilities.assign(static_cast<std::size_t>(inst.n()), Rational{});
    if (winner == 0) return out;
    out.winner = Consortium::from_mask(winner);
    Rational share = inst.prize() / Rational(popcount(winner));
    for_each_member(winner, [&](PlayerId i) { out.utilities[static_cast<std::size_t>(i)] = share; });
    return out;
}

/// A joint deviation: the deviating coalition and the blocks it proposes.
struct Deviation {
    Consortium coalition;
    std::vector<Consortium> blocks;
};

/// One appeal round of the MAGNET closure.
struct ClosureRound {
    Consortium winner_before;
    std::vector<Consortium> accepted_appeals;
    Consortium winner_after;
};

struct ClosureTrace {
    std::vector<ClosureRound> rounds;
};

struct EquilibriumReport {
    SowResult sow;
    /// Distinct winners over all strong-equilibrium profiles, sorted.
    std::vector<Consortium> se_winners;
    std::optional<Rational> spoa;
    std::optional<Rational> spos;
    std::optional<ProposalProfile> worst_profile;
    std::optional<ProposalProfile> best_profile;
    std::size_t profiles = 0;
    std::size_t equilibria = 0;
    std::size_t no_winner_equilibria = 0;
    /// MAGNET only: one trace per distinct round-1 winner among the equilibria.
    std::vector<ClosureTrace> traces;
};

namespace detail {

struct MaskDeviation {
    PlayerMask coalition = 0;
    /// The single nontrivial block (0 if none); other deviators propose alone.
    PlayerMask block = 0;
};

inline Deviation to_deviation(const MaskDeviation& d) {
    Deviation out{Consortium::from_mask(d.coalition), {}};
    if (d.block) out.blocks.push_back(Consortium::from_mask(d.block));
    for_each_member(d.coalition & ~d.block, [&](PlayerId i) { out.blocks.push_back(Consortium{i}); });
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

/// Searches for a coalition deviation that strictly improves every deviator.
///
/// `blocks` are the eligible blocks of the current profile (the other blocks
/// never win and are outcome-equivalent to singletons). `final_of` maps a
/// round-1 winner to the final winner. A deviation reduces without loss to a
/// coalition S = D + one member of each other block it breaks, where D is the
/// only nontrivial new block: extra deviator blocks can only lose in round 1.
/// A broken block's remaining members are inconsistent and cannot win.
template <typename FinalOf>
std::optional<MaskDeviation> find_deviation(const GameContext& ctx, std::span<const PlayerMask> blocks,
                                            FinalOf&& final_of) {
    const auto m = static_cast<int>(blocks.size());
    const PlayerMask w1 = ctx.best_of(blocks);
    const PlayerMask current = w1 ? final_of(w1) : PlayerMask{0};
    const int current_size = popcount(current);
    const std::uint32_t all_blocks = (std::uint32_t{1} << m) - 1;

    auto try_block = [&](PlayerMask d) -> std::optional<MaskDeviation> {
        std::uint32_t touched = 0;
        for (int j = 0; j < m; ++j)
            if (blocks[static_cast<std::size_t>(j)] & d) touched |= std::uint32_t{1} << j;
        const std::uint32_t rest = all_blocks & ~touched;
        // Enumerate the extra broken blocks K as subsets of `rest`.
        std::uint32_t extra = 0;
        while (true) {
            const std::uint32_t broken = touched | extra;
            PlayerMask winner = d;
            std::int32_t winner_rank = d ? ctx.rank(d) : GameContext::kUnranked;
            for (int j = 0; j < m; ++j) {
                if (broken & (std::uint32_t{1} << j)) continue;
                PlayerMask b = blocks[static_cast<std::size_t>(j)];
                if (ctx.rank(b) < winner_rank) {
                    winner_rank = ctx.rank(b);
                    winner = b;
                }
            }
            if (winner != 0) {
                const PlayerMask fin = final_of(winner);
                const bool shrinks = current == 0 || popcount(fin) < current_size;
                // Members already winning need a strictly smaller final winner.
                const PlayerMask allowed = shrinks ? fin : (fin & ~current);
                if ((d & ~allowed) == 0) {
                    PlayerMask coalition = d;
                    bool ok = true;
                    for (int j = 0; j < m && ok; ++j) {
                        if (!(extra & (std::uint32_t{1} << j))) continue;
                        PlayerMask cand = blocks[static_cast<std::size_t>(j)] & allowed;
                        if (cand == 0) ok = false;
                        else coalition |= cand & (~cand + 1);
                    }
                    if (ok && coalition != 0) return MaskDeviation{coalition, d};
                }
            }
            if (extra == rest) break;
            extra = (extra - rest) & rest;  // next subset of rest
        }
        return std::nullopt;
    };

    if (auto dev = try_block(0)) return dev;
    for (PlayerMask d : ctx.eligible_sets())
        if (auto dev = try_block(d)) return dev;
    return std::nullopt;
}

/// Visits each family of pairwise disjoint eligible consortia exactly once
/// (including the empty family). Profiles with the same eligible blocks are
/// outcome-equivalent and equivalent under every deviation.
template <typename F>
void for_each_eligible_packing(const GameContext& ctx, F&& visit) {
    const int n = ctx.n();
    std::vector<std::vector<PlayerMask>> by_lowest(static_cast<std::size_t>(n));
    for (PlayerMask e : ctx.eligible_sets()) by_lowest[static_cast<std::size_t>(lowest(e))].push_back(e);
    for (auto& v : by_lowest) std::sort(v.begin(), v.end());
    std::vector<PlayerMask> chosen;
    auto rec = [&](auto& self, PlayerId p, PlayerMask used) -> void {
        while (p < n && (used & bit(p))) ++p;
        if (p == n) {
            visit(static_cast<const std::vector<PlayerMask>&>(chosen));
            return;
        }
        self(self, p + 1, used | bit(p));
        for (PlayerMask e : by_lowest[static_cast<std::size_t>(p)]) {
            if (e & used) continue;
            chosen.push_back(e);
            self(self, p + 1, used | e);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
}

struct RawReport {
    std::vector<PlayerMask> finals;
    std::vector<PlayerMask> first_round;
    PlayerMask worst = 0, best = 0;
    std::vector<PlayerMask> worst_blocks, best_blocks;
    std::size_t profiles = 0, equilibria = 0, no_winner = 0;
};

template <typename FinalOf>
RawReport enumerate_equilibria(const GameContext& ctx, FinalOf&& final_of) {
    RawReport r;
    std::set<PlayerMask> finals, firsts;
    for_each_eligible_packing(ctx, [&](const std::vector<PlayerMask>& blocks) {
        ++r.profiles;
        if (find_deviation(ctx, blocks, final_of)) return;
        ++r.equilibria;
        const PlayerMask w1 = ctx.best_of(blocks);
        if (w1 == 0) {
            ++r.no_winner;
            return;
        }
        const PlayerMask fin = final_of(w1);
        finals.insert(fin);
        firsts.insert(w1);
        if (r.worst == 0 || ctx.avg_greater(r.worst, fin)) {
            r.worst = fin;
            r.worst_blocks = blocks;
        }
        if (r.best == 0 || ctx.avg_greater(fin, r.best)) {
            r.best = fin;
            r.best_blocks = blocks;
        }
    });
    r.finals.assign(finals.begin(), finals.end());
    r.first_round.assign(firsts.begin(), firsts.end());
    std::sort(r.finals.begin(), r.finals.end(), lex_less);
    std::sort(r.first_round.begin(), r.first_round.end(), lex_less);
    return r;
}

inline EquilibriumReport to_report(const GameContext& ctx, const RawReport& raw) {
    EquilibriumReport rep;
    rep.sow = ctx.sow();
    for (PlayerMask f : raw.finals) rep.se_winners.push_back(Consortium::from_mask(f));
    rep.profiles = raw.profiles;
    rep.equilibria = raw.equilibria;
    rep.no_winner_equilibria = raw.no_winner;
    if (raw.worst == 0)
        throw GameError(ErrorCode::NoStrongEquilibriumWithWinner,
                        "no strong equilibrium with a winner among " + std::to_string(raw.profiles) + " profiles");
    rep.spoa = rep.sow.avg / ctx.avg(raw.worst);
    rep.spos = rep.sow.avg / ctx.avg(raw.best);
    rep.worst_profile = ProposalProfile::with_singletons(ctx.n(), raw.worst_blocks);
    rep.best_profile = ProposalProfile::with_singletons(ctx.n(), raw.best_blocks);
    return rep;
}

inline void check_limit(const Instance& inst, int limit) {
    if (inst.n() > limit)
        throw GameError(ErrorCode::TooLarge, "n = " + std::to_string(inst.n()) + " exceeds enumeration limit " +
                                                 std::to_string(limit));
}

/// Eligible blocks of a profile.
inline std::vector<PlayerMask> eligible_blocks(const GameContext& ctx, const ProposalProfile& p) {
    if (p.n() != ctx.n()) throw GameError(ErrorCode::MalformedInput, "profile size differs from instance");
    std::vector<PlayerMask> out;
    for (PlayerMask b : p.blocks())
        if (ctx.eligible(b)) out.push_back(b);
    return out;
}

}  // namespace detail

/// Result of a strong-equilibrium check; `witness` is set when the profile is not one.
struct StrongCheck {
    bool strong = true;
    std::optional<Deviation> witness;
};

}  // namespace grantgame
