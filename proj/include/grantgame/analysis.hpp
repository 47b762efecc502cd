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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "grantgame/ccc.hpp"
#include "grantgame/context.hpp"
#include "grantgame/generators.hpp"
#include "grantgame/goldrush.hpp"
#include "grantgame/magnet.hpp"
#include "grantgame/subsets.hpp"

namespace grantgame {

enum class Game { goldrush, ccc, magnet };

[[nodiscard]] inline std::optional<Game> parse_game(std::string_view s) {
    if (s == "goldrush" || s == "gold-rush") return Game::goldrush;
    if (s == "ccc") return Game::ccc;
    if (s == "magnet") return Game::magnet;
    return std::nullopt;
}

[[nodiscard]] constexpr std::string_view game_name(Game g) noexcept {
    switch (g) {
        case Game::goldrush: return "goldrush";
        case Game::ccc: return "ccc";
        case Game::magnet: return "magnet";
    }
    return "?";
}

/// Strong-equilibrium report for the CCC or MAGNET game.
[[nodiscard]] inline EquilibriumReport strong_report(Game game, const Instance& inst,
                                                     int limit = kDefaultEnumerationLimit) {
    switch (game) {
        case Game::ccc: return ccc_report(inst, limit);
        case Game::magnet: return magnet_report(inst, limit);
        case Game::goldrush: break;
    }
    throw GameError(ErrorCode::BadParams, "the gold-rush game has no strong-equilibrium report");
}

// ---------------------------------------------------------------------------
// Structural properties of equilibrium winners

struct LemmaProperties {
    bool intersects_sow = false;  // Z and SOW share a member
    bool size_within_sow = false; // |Z| <= |SOW|
    bool avg_dominates = false;   // avg(Z) >= avg(SOW \ Z)
    bool avg_vacuous = false;     // SOW is inside Z, so the third property holds trivially

    [[nodiscard]] bool all() const noexcept { return intersects_sow && size_within_sow && avg_dominates; }
};

[[nodiscard]] inline LemmaProperties verify_lemma_properties(const GameContext& ctx, const Consortium& z) {
    check_members(ctx.instance(), z);
    const PlayerMask zm = z.mask();
    if (!ctx.eligible(zm)) throw GameError(ErrorCode::BadParams, z.str() + " is not eligible");
    const PlayerMask sow = ctx.eligible_sets().front();
    LemmaProperties p;
    p.intersects_sow = (zm & sow) != 0;
    p.size_within_sow = popcount(zm) <= popcount(sow);
    const PlayerMask rest = sow & ~zm;
    p.avg_vacuous = rest == 0;
    p.avg_dominates = p.avg_vacuous || !ctx.avg_greater(rest, zm);
    return p;
}

[[nodiscard]] inline LemmaProperties verify_lemma_properties(const Instance& inst, const Consortium& z) {
    return verify_lemma_properties(GameContext(inst), z);
}

// ---------------------------------------------------------------------------
// Three-nonzero bound

struct ThreeNzBound {
    /// (dist(p_x, W) + |W|) / k
    Rational bound;
    /// The nonzero optimum member outside W.
    PlayerId outside = -1;
    int distance = 0;
    int k = 0;
    Rational x;
    /// x <= dist * sum(W) / |W|
    bool lemma_holds = false;
    Rational lemma_rhs;
    bool winner_eligible = false;
};

/// Bounds SPOA for an instance with exactly three nonzero players, given a
/// winner `w`. The reference optimum defaults to find_sow(); pass one
/// explicitly to evaluate the bound against a designated optimal set. When
/// several nonzero optimum members lie outside `w`, the farthest is used.
[[nodiscard]] inline ThreeNzBound three_nz_bound(const Instance& inst, const Consortium& w,
                                                 const std::optional<Consortium>& optimum = std::nullopt) {
    check_members(inst, w);
    PlayerMask nonzero = 0;
    for (PlayerId i = 0; i < inst.n(); ++i)
        if (!inst.value(i).is_zero()) nonzero |= bit(i);
    if (popcount(nonzero) != 3)
        throw GameError(ErrorCode::NotThreeNonzero,
                        "instance has " + std::to_string(popcount(nonzero)) + " nonzero players");
    const Consortium opt = optimum ? *optimum : find_sow(inst).consortium;
    check_members(inst, opt);
    const PlayerMask wm = w.mask();
    const PlayerMask outside = opt.mask() & nonzero & ~wm;
    if (outside == 0)
        throw GameError(ErrorCode::NoOutsideNonzero, "every nonzero member of the optimum lies in " + w.str());

    ThreeNzBound r;
    r.distance = -1;
    for_each_member(outside, [&](PlayerId i) {
        auto d = distance(inst, i, wm);
        if (!d) throw GameError(ErrorCode::BadParams, "player " + std::to_string(i) + " cannot reach " + w.str());
        if (*d > r.distance) {
            r.distance = *d;
            r.outside = i;
        }
    });
    r.k = static_cast<int>(opt.size());
    r.x = inst.value(r.outside);
    const Rational size(static_cast<Rational::int_type>(w.size()));
    r.bound = (Rational(r.distance) + size) / Rational(r.k);
    r.lemma_rhs = Rational(r.distance) * sum_of(inst, wm) / size;
    r.lemma_holds = r.x <= r.lemma_rhs;
    r.winner_eligible = is_eligible(inst, wm);
    return r;
}

/// Positions of the three nonzero players on a cartwheel.
struct Placement {
    PlayerId eps_at = 0;
    PlayerId big_at = 0;
    PlayerId x_at = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct PlacementHit {
    Placement placement;
    Consortium winner;
    ThreeNzBound bound;
};

/// Tries every placement of eps, T - eps and x on the n-node cartwheel and
/// returns those where some MAGNET strong-equilibrium winner W, with
/// find_sow() of size k, yields three_nz_bound(W) == target. Sorted by
/// placement, then winner.
[[nodiscard]] inline std::vector<PlacementHit> cartwheel_placements(int n, const Rational& t, const Rational& eps,
                                                                    const Rational& x, int k, const Rational& target,
                                                                    int limit = kMaxPlayers) {
    const auto edges = gen_graph(GraphFamily::cartwheel, n);
    std::vector<PlacementHit> hits;
    for (PlayerId a = 0; a < n; ++a)
        for (PlayerId b = 0; b < n; ++b)
            for (PlayerId c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                std::vector<Rational> values(static_cast<std::size_t>(n));
                values[static_cast<std::size_t>(a)] = eps;
                values[static_cast<std::size_t>(b)] = t - eps;
                values[static_cast<std::size_t>(c)] = x;
                Instance inst = validate_instance({n, edges, std::move(values), t, Rational(1)});
                MagnetContext mctx(inst);
                if (static_cast<int>(popcount(mctx.game().eligible_sets().front())) != k) continue;
                EquilibriumReport rep;
                try {
                    rep = magnet_report(mctx, limit);
                } catch (const GameError&) {
                    continue;
                }
                for (const auto& w : rep.se_winners) {
                    try {
                        auto b3 = three_nz_bound(inst, w);
                        if (b3.bound == target) hits.push_back({{a, b, c}, w, b3});
                    } catch (const GameError&) {
                    }
                }
            }
    return hits;
}

// ---------------------------------------------------------------------------
// Closed-form bounds and sweeps

enum class BoundFamily { clique, line, general, ccc_clique };

[[nodiscard]] inline std::optional<BoundFamily> parse_bound_family(std::string_view s) {
    if (s == "clique" || s == "complete") return BoundFamily::clique;
    if (s == "line") return BoundFamily::line;
    if (s == "general") return BoundFamily::general;
    if (s == "ccc-clique") return BoundFamily::ccc_clique;
    return std::nullopt;
}

/// MAGNET on cliques 1 + 1/k, on lines 1 + (k-1)/k, in general 2; CCC on cliques 1 + 1/(k-1).
[[nodiscard]] inline Rational theoretical_bound(int k, BoundFamily family) {
    if (k < 2) throw GameError(ErrorCode::BadParams, "k must be at least 2");
    switch (family) {
        case BoundFamily::clique: return Rational(1) + Rational(1, k);
        case BoundFamily::line: return Rational(1) + Rational(k - 1, k);
        case BoundFamily::general: return Rational(2);
        case BoundFamily::ccc_clique: return Rational(1) + Rational(1, k - 1);
    }
    return Rational(2);
}

enum class SweepFamily { clique, line };

struct SweepRow {
    int k = 0;
    Game game = Game::magnet;
    SweepFamily family = SweepFamily::clique;
    /// Largest spoa over the eps values (the smallest eps in practice).
    Rational observed;
    Rational bound;
    /// spoa per eps, in the order the eps values were given.
    std::vector<Rational> by_eps;
};

struct SweepOptions {
    std::vector<Rational> eps{Rational(4), Rational(2), Rational(1)};
    int limit = 10;
};

/// Instantiates the extremal family for each k and computes the exact spoa:
/// clique/magnet uses magnet-clique-lower at T = 12k, clique/ccc uses
/// ccc-clique-lower at T = 120, line/magnet uses line-worstcase at T = 30k.
[[nodiscard]] inline std::vector<SweepRow> spoa_sweep(SweepFamily family, int k_min, int k_max, Game game,
                                                      const SweepOptions& opts = {}) {
    if (game == Game::goldrush) throw GameError(ErrorCode::BadParams, "sweeps cover ccc and magnet");
    if (family == SweepFamily::line && game == Game::ccc)
        throw GameError(ErrorCode::BadParams, "no closed-form ccc bound on lines");
    if (k_min < 2 || k_max < k_min) throw GameError(ErrorCode::BadParams, "bad k range");
    std::vector<SweepRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        SweepRow row;
        row.k = k;
        row.game = game;
        row.family = family;
        for (const auto& eps : opts.eps) {
            PaperParams p;
            p.eps = eps;
            Instance inst = [&] {
                if (family == SweepFamily::line) {
                    p.n = k;
                    p.threshold = Rational(30 * k);
                    return paper_instance("line-worstcase", p);
                }
                p.k = k;
                if (game == Game::magnet) {
                    p.threshold = Rational(12 * k);
                    return paper_instance("magnet-clique-lower", p);
                }
                p.threshold = Rational(120);
                return paper_instance("ccc-clique-lower", p);
            }();
            auto rep = strong_report(game, inst, opts.limit);
            row.by_eps.push_back(*rep.spoa);
            if (row.by_eps.size() == 1 || *rep.spoa > row.observed) row.observed = *rep.spoa;
        }
        row.bound = theoretical_bound(k, family == SweepFamily::line ? BoundFamily::line
                                         : game == Game::magnet       ? BoundFamily::clique
                                                                      : BoundFamily::ccc_clique);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline constexpr std::string_view kSweepCsvHeader = "k,game,family,observed_spoa_num,observed_spoa_den,bound_num,bound_den";

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.k << ',' << game_name(r.game) << ',' << (r.family == SweepFamily::clique ? "clique" : "line") << ','
           << r.observed.num() << ',' << r.observed.den() << ',' << r.bound.num() << ',' << r.bound.den() << '\n';
    }
}

}  // namespace grantgame
