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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when a criterion fails outside the documented known failures.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "grantgame/grantgame.hpp"
#include "reference.hpp"

using namespace grantgame;

namespace {

struct Criterion {
    Criterion(int id_, const char* title_) : id(id_), title(title_) {}

    int id;
    const char* title;
    bool pass = true;
    std::ostringstream notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes << " [violated: " << what << ']';
        }
    }
};

/// SE winners and existence, collected from every instance of criteria 1-3.
struct LemmaLedger {
    std::size_t winners = 0, violations = 0, instances = 0, without_se = 0;
    std::string first_violation, first_without_se;

    /// All three properties for MAGNET winners; the first two for CCC winners.
    void winners_of(const Instance& inst, const std::vector<Consortium>& ws, bool magnet = true) {
        for (const auto& z : ws) {
            ++winners;
            const auto p = verify_lemma_properties(inst, z);
            if (!(magnet ? p.all() : p.intersects_sow && p.size_within_sow)) {
                if (!violations++) first_violation = to_json(inst).dump() + " winner " + z.str();
            }
        }
    }
    void existence(const Instance& inst, bool has_se) {
        ++instances;
        if (!has_se && !without_se++) first_without_se = to_json(inst).dump();
    }
};

void report(Criterion& c) {
    std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << "  |"
              << c.notes.str() << std::endl;
}

/// MAGNET report, or nullopt when the instance has no strong equilibrium.
std::optional<EquilibriumReport> try_magnet(const Instance& inst) {
    try {
        return magnet_report(inst, kMaxPlayers);
    } catch (const GameError& e) {
        if (e.code() != ErrorCode::NoStrongEquilibriumWithWinner) throw;
        return std::nullopt;
    }
}

Instance paper(const char* name, PaperParams p) { return paper_instance(name, p); }

bool criterion1(LemmaLedger& ledger) {
    Criterion c(1, "line worst case: magnet spoa == (2n-1)/n - eps/T");
    for (int n = 3; n <= 5; ++n)
        for (int e : {3, 1}) {
            PaperParams p;
            p.n = n;
            p.threshold = Rational(30 * n);
            p.eps = Rational(e);
            Instance inst = paper("line-worstcase", p);
            auto rep = try_magnet(inst);
            ledger.existence(inst, rep.has_value());
            const Rational expected = Rational(2 * n - 1, n) - p.eps / p.threshold;
            const std::string tag = "n=" + std::to_string(n) + " eps=" + std::to_string(e);
            c.require(rep.has_value(), tag + " has no SE");
            if (!rep) continue;
            ledger.winners_of(inst, rep->se_winners);
            c.notes << ' ' << tag << ":" << rep->spoa->str();
            c.require(*rep->spoa == expected, tag + " expected " + expected.str());
        }
    report(c);
    return c.pass;
}

bool criterion2(LemmaLedger& ledger) {
    Criterion c(2, "magnet spoa <= 2 over all connected graphs n<=5 plus seeded n=6 sample");
    std::optional<Rational> worst;
    std::size_t evaluated = 0, failures = 0;
    for (int t : {6, 12}) {
        const Rational tt(t);
        SearchOptions o;
        o.game = Game::magnet;
        o.n_min = 2;
        o.n_max = 6;
        o.exhaustive_max = 5;
        o.samples = 150;
        o.seed = 2026;
        o.threshold = tt;
        o.grid = {Rational(0), Rational(1), tt / Rational(3), tt / Rational(2), tt - Rational(1)};
        o.prune = false;
        o.on_report = [&](const Instance& inst, const EquilibriumReport& rep) {
            ledger.winners_of(inst, rep.se_winners);
            ledger.existence(inst, true);
        };
        auto r = worst_case_search(o);
        for (const auto& f : r.failures) ledger.existence(f.instance, false);
        evaluated += r.evaluated;
        failures += r.failures.size();
        if (r.spoa && (!worst || *r.spoa > *worst)) worst = r.spoa;
        c.notes << " T=" << t << ": max spoa " << (r.spoa ? r.spoa->str() : "none") << " over " << r.evaluated
                << " instances;";
        c.require(r.spoa && *r.spoa <= Rational(2), "spoa above 2 at T=" + std::to_string(t));
    }
    c.notes << " instances without any SE (no spoa defined): " << failures;
    report(c);
    return c.pass;
}

bool criterion3(LemmaLedger& ledger) {
    Criterion c(3, "clique bounds: magnet 1+1/k increasing as eps shrinks; ccc 1+1/(k-1) with constructed SE winner");
    for (int k = 2; k <= 4; ++k) {
        std::optional<Rational> prev;
        c.notes << " magnet k=" << k << ':';
        for (int e : {4, 2, 1}) {
            PaperParams p;
            p.k = k;
            p.threshold = Rational(12 * k);
            p.eps = Rational(e);
            Instance inst = paper("magnet-clique-lower", p);
            auto rep = try_magnet(inst);
            ledger.existence(inst, rep.has_value());
            c.require(rep.has_value(), "magnet clique k=" + std::to_string(k) + " has no SE");
            if (!rep) continue;
            ledger.winners_of(inst, rep->se_winners);
            c.notes << ' ' << rep->spoa->str();
            c.require(*rep->spoa <= theoretical_bound(k, BoundFamily::clique), "magnet clique bound k=" + std::to_string(k));
            if (prev) c.require(*rep->spoa > *prev, "magnet clique not increasing at k=" + std::to_string(k));
            prev = rep->spoa;
        }
        c.notes << ';';
    }
    for (int k = 2; k <= 4; ++k) {
        PaperParams p;
        p.k = k;
        p.threshold = Rational(120);
        p.eps = Rational(1);
        Instance inst = paper("ccc-clique-lower", p);
        const auto rep = ccc_report(inst, kMaxPlayers);
        ledger.winners_of(inst, rep.se_winners, false);
        auto mag = try_magnet(inst);
        ledger.existence(inst, mag.has_value());
        if (mag) ledger.winners_of(inst, mag->se_winners);
        // Players 1..k-1 and k+1 counted from one are 0..k-2 and k here.
        std::vector<PlayerId> ids;
        for (PlayerId i = 0; i <= k - 2; ++i) ids.push_back(i);
        ids.push_back(k);
        const Consortium z(ids);
        const auto profile = ProposalProfile::with_singletons(inst.n(), {z.mask()});
        const bool strong = ccc_is_strong(inst, profile).strong;
        const bool listed = std::find(rep.se_winners.begin(), rep.se_winners.end(), z) != rep.se_winners.end();
        c.notes << " ccc k=" << k << ": " << rep.spoa->str() << " winner " << z.str() << (strong ? " is SE" : " not SE")
                << ';';
        c.require(*rep.spoa <= theoretical_bound(k, BoundFamily::ccc_clique), "ccc clique bound k=" + std::to_string(k));
        c.require(strong && listed, "constructed ccc winner not an SE at k=" + std::to_string(k));
    }
    report(c);
    return c.pass;
}

bool criterion4(const LemmaLedger& ledger) {
    Criterion c(4, "lemma properties on every SE winner of criteria 1-3; every instance has a MAGNET SE");
    c.notes << ' ' << ledger.winners << " winners checked, " << ledger.violations << " property violations; "
            << ledger.instances << " instances, " << ledger.without_se << " without a MAGNET SE";
    c.require(ledger.violations == 0, "lemma property fails on " + ledger.first_violation);
    c.require(ledger.without_se == 0, "no strong equilibrium exists, e.g. " + ledger.first_without_se);
    report(c);
    return c.pass;
}

bool criterion5() {
    Criterion c(5, "gold rush: Nash dichotomy, POA in [n/2 - delta, n/2] with delta -> 0, SE nonexistence");
    std::mt19937_64 rng(55);
    std::size_t instances = 0, nash = 0, strong_checked = 0;
    for (int n = 2; n <= 5; ++n)
        for (int rep = 0; rep < 40; ++rep) {
            // Distinct values on the complete graph.
            std::vector<int> pool(20);
            std::iota(pool.begin(), pool.end(), 1);
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Rational> values;
            int total = 0, top = 0;
            for (int i = 0; i < n; ++i) {
                values.emplace_back(pool[static_cast<std::size_t>(i)]);
                total += pool[static_cast<std::size_t>(i)];
                top = std::max(top, pool[static_cast<std::size_t>(i)]);
            }
            if (top + 1 > total - 1) continue;
            std::uniform_int_distribution<int> pick_t(top + 1, total - 1);
            Instance inst =
                validate_instance({n, gen_graph(GraphFamily::complete, n), values, Rational(pick_t(rng)), Rational(1)});
            ++instances;
            bool strict_eligible = false;
            for (const auto& s : connected_subsets(inst))
                if (static_cast<int>(s.size()) < n && is_eligible(inst, s.mask())) strict_eligible = true;
            GameContext ctx(inst);
            for_each_set_partition(n, [&](const std::vector<int>& labels) {
                Labeling lab{labels};
                if (goldrush_is_nash(ctx, lab).nash) {
                    ++nash;
                    const auto w = goldrush_outcome(ctx, lab).winner;
                    const bool same = std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
                    c.require(!w || same, "Nash with a winner and mixed labels on " + to_json(inst).dump());
                }
                if (strict_eligible) {
                    ++strong_checked;
                    c.require(!goldrush_is_strong(ctx, lab).strong, "SE exists on " + to_json(inst).dump());
                }
            });
            auto g = goldrush_report(ctx, kMaxPlayers);
            if (g.poa) c.require(*g.poa <= Rational(n, 2), "POA above n/2 on " + to_json(inst).dump());
        }
    c.notes << ' ' << instances << " instances, " << nash << " Nash profiles, " << strong_checked
            << " SE checks;";
    for (int n = 3; n <= 5; ++n) {
        std::optional<Rational> prev_delta;
        c.notes << " worst n=" << n << " delta:";
        for (Rational eps : {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 100)}) {
            PaperParams p;
            p.n = n;
            p.threshold = Rational(12);
            p.eps = eps;
            auto g = goldrush_report(paper("goldrush-worst", p), kMaxPlayers);
            c.require(g.poa.has_value(), "goldrush-worst has no Nash winner");
            if (!g.poa) continue;
            const Rational delta = Rational(n, 2) - *g.poa;
            c.notes << ' ' << delta.str();
            c.require(delta.sign() >= 0, "POA above n/2 on goldrush-worst n=" + std::to_string(n));
            if (prev_delta) c.require(delta < *prev_delta, "delta not shrinking at n=" + std::to_string(n));
            prev_delta = delta;
        }
        c.require(prev_delta && *prev_delta < Rational(1, 10), "delta not near 0 at n=" + std::to_string(n));
        c.notes << ';';
    }
    report(c);
    return c.pass;
}

bool criterion6() {
    Criterion c(6, "ccc search over n<=6 finds spoa > 2 and nothing above 3");
    SearchOptions o;
    o.game = Game::ccc;
    o.n_max = 6;
    o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto r = worst_case_search(o);
    c.require(r.spoa.has_value(), "no instance evaluated");
    if (r.spoa) {
        c.notes << " best spoa " << r.spoa->str() << " on " << to_json(*r.best_instance).dump() << " ("
                << r.evaluated << " evaluated, " << r.pruned << " pruned, " << r.failures.size() << " without SE)";
        c.require(*r.spoa > Rational(2), "best spoa not above 2");
        c.require(*r.spoa <= Rational(3), "spoa above 3");
    }
    report(c);
    return c.pass;
}

bool criterion7() {
    Criterion c(7, "cartwheel three-nonzero bounds 3/2, 5/4, 5/3 and the distance lemma");
    const Rational t(12), eps(1);
    const Consortium p_opt{3, 4, 5, 6}, w1{0, 1, 2, 3}, w2{0, 3, 4, 5};
    auto cartwheel = [&](const char* name, const Rational& x) {
        PaperParams p;
        p.threshold = t;
        p.eps = eps;
        p.x = x;
        return paper(name, p);
    };
    // X in (t/4, t/2] against W1, X in (eps, t/4] against W2, optimum P = nodes 3-6.
    std::size_t sow_differs = 0;
    for (int num = 13; num <= 24; ++num) {
        const Rational x(num, 4);
        const Instance inst = cartwheel("cartwheel-3nz", x);
        auto b = three_nz_bound(inst, w1, p_opt);
        c.require(b.bound == Rational(3, 2), "W1 bound at X=" + x.str() + " is " + b.bound.str());
        if (find_sow(inst).consortium != p_opt) ++sow_differs;
        else c.require(three_nz_bound(inst, w1).bound == Rational(3, 2), "W1 bound with computed optimum at X=" + x.str());
    }
    for (int num = 5; num <= 12; ++num) {
        const Rational x(num, 4);
        auto b = three_nz_bound(cartwheel("cartwheel-3nz", x), w2, p_opt);
        c.require(b.bound == Rational(5, 4), "W2 bound at X=" + x.str() + " is " + b.bound.str());
    }
    c.notes << " 3/2 and 5/4 hold against P={3,4,5,6}; computed optimum differs from P at " << sow_differs
            << " of 12 sampled X in (t/4, t/2];";
    {
        const Instance inst = cartwheel("cartwheel-3nz-k3", Rational(4));
        auto b = three_nz_bound(inst, Consortium{1, 2, 3});
        c.notes << " k=3 arrangement: optimum " << find_sow(inst).consortium.str() << " bound " << b.bound.str() << ';';
        c.require(b.bound == Rational(5, 3), "k=3 arrangement bound is " + b.bound.str());
        const auto rep = magnet_report(inst, kMaxPlayers);
        c.require(std::find(rep.se_winners.begin(), rep.se_winners.end(), Consortium{1, 2, 3}) != rep.se_winners.end(),
                  "{1,2,3} is not a MAGNET SE winner in the k=3 arrangement");
    }
    std::size_t checked = 0;
    for (const char* name : {"cartwheel-3nz", "cartwheel-3nz-k3"})
        for (int x = 2; x < 12; ++x) {
            const Instance inst = cartwheel(name, Rational(x));
            auto rep = try_magnet(inst);
            if (!rep) continue;
            for (const auto& w : rep->se_winners) {
                try {
                    auto b = three_nz_bound(inst, w);
                    ++checked;
                    c.require(b.lemma_holds, std::string(name) + " x=" + std::to_string(x) + " winner " + w.str());
                } catch (const GameError& e) {
                    if (e.code() != ErrorCode::NoOutsideNonzero) throw;
                }
            }
        }
    c.notes << " distance lemma checked on " << checked << " winners";
    c.require(checked > 0, "no winner reached the distance lemma");
    report(c);
    return c.pass;
}

bool criterion8() {
    Criterion c(8, "optimized paths equal the naive reference on 50 seeded instances");
    std::mt19937_64 rng(8);
    std::size_t profiles = 0;
    for (int t = 0; t < 50; ++t) {
        const Instance inst = ref::random_instance(rng, 2, 5);
        const std::string tag = to_json(inst).dump();
        std::set<ref::Set> fast;
        for (const auto& s : connected_subsets(inst)) fast.insert(ref::Set(s.begin(), s.end()));
        const auto naive = ref::connected_subsets(inst);
        c.require(fast == std::set<ref::Set>(naive.begin(), naive.end()), "connected subsets on " + tag);
        const auto sow = find_sow(inst).consortium;
        c.require(ref::Set(sow.begin(), sow.end()) == *ref::sow(inst), "sow on " + tag);
        for (const auto& s : naive)
            if (ref::eligible(inst, s)) {
                auto cl = magnet_closure(inst, Consortium(std::vector<PlayerId>(s.begin(), s.end()))).final;
                c.require(ref::Set(cl.begin(), cl.end()) == ref::closure(inst, s), "closure on " + tag);
            }
        const GameContext ctx(inst);
        const MagnetContext mctx(inst);
        for (const auto& part : ref::all_partitions(inst.n())) {
            ++profiles;
            std::vector<Consortium> blocks;
            for (const auto& b : part) blocks.emplace_back(std::vector<PlayerId>(b.begin(), b.end()));
            const auto p = ProposalProfile::from_consortia(inst.n(), blocks);
            for (bool magnet : {false, true}) {
                const auto w = magnet ? magnet_outcome(ctx, p).outcome.winner : ccc_outcome(inst, p).winner;
                const auto rw = ref::winner(inst, part, magnet);
                c.require(w.has_value() == rw.has_value() && (!w || ref::Set(w->begin(), w->end()) == *rw),
                          "winner on " + tag + ' ' + p.str());
                const bool strong = magnet ? magnet_is_strong(mctx, p).strong : ccc_is_strong(ctx, p).strong;
                c.require(strong == ref::is_strong(inst, part, magnet), "SE check on " + tag + ' ' + p.str());
            }
        }
    }
    c.notes << " 50 instances, " << profiles << " profiles per game";
    report(c);
    return c.pass;
}

/// Runs one criterion; an unexpected exception counts as a failure.
template <typename F>
bool guarded(int id, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        std::cout << "criterion " << id << ": FAIL  unexpected exception: " << e.what() << std::endl;
        return false;
    }
}

/// Criteria that fail on a confirmed counterexample to the stated result.
/// They still print FAIL; only other failures change the exit status.
struct KnownFailure {
    int id;
    const char* reason;
};
constexpr KnownFailure kKnownFailures[] = {
    {4, "some instances have no MAGNET strong equilibrium (cyclic deviations, confirmed by the naive oracle)"},
};

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    LemmaLedger ledger;
    std::vector<std::pair<int, bool>> results;
    results.emplace_back(1, guarded(1, [&] { return criterion1(ledger); }));
    results.emplace_back(2, guarded(2, [&] { return criterion2(ledger); }));
    results.emplace_back(3, guarded(3, [&] { return criterion3(ledger); }));
    results.emplace_back(4, guarded(4, [&] { return criterion4(ledger); }));
    results.emplace_back(5, guarded(5, criterion5));
    results.emplace_back(6, guarded(6, criterion6));
    results.emplace_back(7, guarded(7, criterion7));
    results.emplace_back(8, guarded(8, criterion8));

    int passed = 0, known = 0, unexpected = 0;
    for (auto [id, ok] : results) {
        if (ok) {
            ++passed;
            continue;
        }
        const auto* k = std::find_if(std::begin(kKnownFailures), std::end(kKnownFailures),
                                     [id = id](const KnownFailure& f) { return f.id == id; });
        if (k != std::end(kKnownFailures)) {
            ++known;
            std::cout << "known failure: criterion " << id << ": " << k->reason << std::endl;
        } else {
            ++unexpected;
        }
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "summary: " << passed << " PASS, " << known + unexpected << " FAIL (" << known << " known, "
              << unexpected << " unexpected) in " << secs << " s" << std::endl;
    return unexpected == 0 ? 0 : 1;
}
