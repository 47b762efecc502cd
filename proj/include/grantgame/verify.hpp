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

// Theorem grid: compares each closed-form upper bound with exact values
// computed on a fixed set of instances.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "grantgame/analysis.hpp"
#include "grantgame/io.hpp"
#include "grantgame/search.hpp"

namespace grantgame {

struct Witness {
    Instance instance;
    std::optional<ProposalProfile> profile;
};

struct BoundVerdict {
    std::string bound_name;
    Rational claimed;
    Rational observed;
    bool holds = false;
    std::optional<Witness> witness;
    /// Instances skipped because no equilibrium with a winner exists.
    std::size_t skipped = 0;
};

[[nodiscard]] inline BoundVerdict make_verdict(std::string name, const Rational& claimed, const Rational& observed,
                                               std::optional<Witness> witness = std::nullopt) {
    return {std::move(name), claimed, observed, observed <= claimed, std::move(witness), 0};
}

enum class VerifyGrid { quick, full };

[[nodiscard]] inline std::optional<VerifyGrid> parse_verify_grid(std::string_view s) {
    if (s == "default" || s == "quick") return VerifyGrid::quick;
    if (s == "full") return VerifyGrid::full;
    return std::nullopt;
}

namespace detail {

/// Keeps the case with the largest observed / claimed ratio.
class WorstCase {
public:
    void offer(const Rational& claimed, const Rational& observed, Witness w) {
        const Rational ratio = observed / claimed;
        if (!ratio_ || ratio > *ratio_) {
            ratio_ = ratio;
            claimed_ = claimed;
            observed_ = observed;
            witness_ = std::move(w);
        }
    }
    [[nodiscard]] BoundVerdict verdict(std::string name) const {
        if (!ratio_) return make_verdict(std::move(name), Rational(1), Rational(0));
        return make_verdict(std::move(name), claimed_, observed_, witness_);
    }

private:
    std::optional<Rational> ratio_;
    Rational claimed_, observed_;
    std::optional<Witness> witness_;
};

inline BoundVerdict search_verdict(std::string name, const Rational& claimed, SearchOptions opts,
                                   const std::vector<Rational>& thresholds) {
    std::optional<Rational> observed;
    std::optional<Witness> witness;
    std::size_t skipped = 0;
    for (const auto& t : thresholds) {
        opts.threshold = t;
        opts.grid = {Rational{}, Rational(1), t / Rational(3), t / Rational(2), t - Rational(1)};
        auto r = worst_case_search(opts);
        skipped += r.failures.size();
        if (r.spoa && (!observed || *r.spoa > *observed)) {
            observed = r.spoa;
            witness = Witness{*r.best_instance, r.profile};
        }
    }
    auto v = make_verdict(std::move(name), claimed, observed.value_or(Rational(0)), std::move(witness));
    v.skipped = skipped;
    return v;
}

}  // namespace detail

/// Runs the theorem grid. `quick` finishes in seconds; `full` widens the
/// exhaustive searches by one graph order.
[[nodiscard]] inline std::vector<BoundVerdict> verify_bounds(VerifyGrid grid, int jobs = 1) {
    const bool full = grid == VerifyGrid::full;
    std::vector<BoundVerdict> out;

    for (int k = 2; k <= 4; ++k) {
        detail::WorstCase worst;
        for (int e : {4, 2, 1}) {
            PaperParams p;
            p.k = k;
            p.threshold = Rational(12 * k);
            p.eps = Rational(e);
            Instance inst = paper_instance("magnet-clique-lower", p);
            auto rep = magnet_report(inst, kMaxPlayers);
            worst.offer(theoretical_bound(k, BoundFamily::clique), *rep.spoa, {inst, rep.worst_profile});
        }
        out.push_back(worst.verdict("magnet-clique[k=" + std::to_string(k) + "]"));
    }
    for (int n = 3; n <= (full ? 5 : 4); ++n) {
        detail::WorstCase worst;
        for (int e : {3, 1}) {
            PaperParams p;
            p.n = n;
            p.threshold = Rational(30 * n);
            p.eps = Rational(e);
            Instance inst = paper_instance("line-worstcase", p);
            auto rep = magnet_report(inst, kMaxPlayers);
            worst.offer(theoretical_bound(n, BoundFamily::line), *rep.spoa, {inst, rep.worst_profile});
        }
        out.push_back(worst.verdict("magnet-line[k=" + std::to_string(n) + "]"));
    }
    for (int k = 2; k <= 4; ++k) {
        PaperParams p;
        p.k = k;
        p.threshold = Rational(120);
        Instance inst = paper_instance("ccc-clique-lower", p);
        auto rep = ccc_report(inst, kMaxPlayers);
        out.push_back(make_verdict("ccc-clique[k=" + std::to_string(k) + "]",
                                   theoretical_bound(k, BoundFamily::ccc_clique), *rep.spoa,
                                   Witness{inst, rep.worst_profile}));
    }
    for (int n = 3; n <= 5; ++n) {
        PaperParams p;
        p.n = n;
        p.eps = Rational(1, 100);
        Instance inst = paper_instance("goldrush-worst", p);
        auto rep = goldrush_report(inst, kMaxPlayers);
        out.push_back(make_verdict("goldrush-poa[n=" + std::to_string(n) + "]", Rational(n, 2),
                                   rep.poa.value_or(Rational(0)), Witness{inst, std::nullopt}));
    }
    {
        SearchOptions o;
        o.game = Game::magnet;
        o.n_max = full ? 5 : 4;
        o.jobs = jobs;
        out.push_back(detail::search_verdict("magnet-general", Rational(2), o, {Rational(6), Rational(12)}));
    }
    {
        // Open conjecture in the CCC case; checked as a bound all the same.
        SearchOptions o;
        o.game = Game::ccc;
        o.n_max = full ? 6 : 5;
        o.jobs = jobs;
        out.push_back(detail::search_verdict("ccc-general", Rational(3), o, {Rational(12)}));
    }
    {
        detail::WorstCase bound, lemma;
        const Rational t(12), eps(1);
        for (const char* name : {"cartwheel-3nz", "cartwheel-3nz-k3"})
            for (int x = 2; x < 12; ++x) {
                PaperParams p;
                p.threshold = t;
                p.eps = eps;
                p.x = Rational(x);
                Instance inst = paper_instance(name, p);
                MagnetContext mctx(inst);
                auto rep = magnet_report(mctx, kMaxPlayers);
                for (const auto& w : rep.se_winners) {
                    ThreeNzBound b;
                    try {
                        b = three_nz_bound(inst, w);
                    } catch (const GameError&) {
                        continue;
                    }
                    const Rational spoa = rep.sow.avg / mctx.game().avg(w.mask());
                    bound.offer(b.bound, spoa, {inst, rep.worst_profile});
                    lemma.offer(b.lemma_rhs, b.x, {inst, rep.worst_profile});
                }
            }
        out.push_back(bound.verdict("three-nz-spoa"));
        out.push_back(lemma.verdict("three-nz-lemma"));
    }
    return out;
}

inline void write_verdict(std::ostream& os, const BoundVerdict& v) {
    os << v.bound_name << " claimed=" << v.claimed.str() << " observed=" << v.observed.str()
       << " holds=" << (v.holds ? "true" : "false");
    if (v.skipped) os << " skipped=" << v.skipped;
    if (!v.holds && v.witness) {
        os << " witness=" << to_json(v.witness->instance).dump();
        if (v.witness->profile) os << " profile=" << v.witness->profile->str();
    }
    os << '\n';
}

}  // namespace grantgame
