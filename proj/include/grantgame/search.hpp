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

// Worst-case instance search: maximizes exact spoa over graphs and value
// assignments drawn from a finite grid.

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "grantgame/analysis.hpp"
#include "grantgame/graphs.hpp"
#include "grantgame/io.hpp"

namespace grantgame {

/// Default grid {0, eps, T/3, T/2, T - eps}, sorted and deduplicated.
[[nodiscard]] inline std::vector<Rational> default_value_grid(const Rational& t, const Rational& eps) {
    std::vector<Rational> g{Rational{}, eps, t / Rational(3), t / Rational(2), t - eps};
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

/// Upper bound on the spoa of any strong-equilibrium winner Z satisfying
/// Z meets the SOW and |Z| <= |SOW|, which every CCC and MAGNET SE winner does.
[[nodiscard]] inline Rational spoa_upper_bound(const GameContext& ctx) {
    const PlayerMask sow = ctx.eligible_sets().front();
    PlayerMask worst = sow;
    for (PlayerMask w : ctx.eligible_sets())
        if ((w & sow) && popcount(w) <= popcount(sow) && ctx.avg_greater(worst, w)) worst = w;
    return ctx.avg(sow) / ctx.avg(worst);
}

struct SearchOptions {
    Game game = Game::ccc;
    /// std::nullopt searches every connected graph (isomorphism classes).
    std::optional<GraphFamily> family;
    int n_min = 2;
    int n_max = 5;
    Rational threshold{12};
    Rational eps{1};
    /// Empty means default_value_grid(threshold, eps).
    std::vector<Rational> grid;
    /// Sizes above this are sampled rather than enumerated.
    int exhaustive_max = 6;
    /// Random instances per sampled size.
    int samples = 0;
    std::uint64_t seed = 1;
    int jobs = 1;
    /// Skip instances whose spoa_upper_bound is below the best found so far.
    bool prune = true;
    /// Called for every fully evaluated instance, serialized under a lock.
    std::function<void(const Instance&, const EquilibriumReport&)> on_report;
};

struct SearchFailure {
    Instance instance;
    std::string error;
};

struct SearchResult {
    std::optional<Instance> best_instance;
    std::optional<Rational> spoa;
    std::optional<ProposalProfile> profile;
    std::size_t candidates = 0;
    std::size_t evaluated = 0;
    std::size_t pruned = 0;
    std::vector<SearchFailure> failures;
};

namespace detail {

/// Vertex permutations that preserve the edge set.
inline std::vector<std::vector<int>> automorphisms(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [a, b] : edges)
            if (!adj[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])][static_cast<std::size_t>(
                    p[static_cast<std::size_t>(b)])]) {
                ok = false;
                break;
            }
        if (ok && !std::is_sorted(p.begin(), p.end())) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Whether `idx` is lexicographically minimal in its orbit under `autos`.
inline bool canonical_assignment(const std::vector<int>& idx, const std::vector<std::vector<int>>& autos) {
    const std::size_t n = idx.size();
    for (const auto& p : autos) {
        // Image assigns idx[i] to vertex p[i].
        for (std::size_t v = 0; v < n; ++v) {
            // Find the vertex mapped onto v.
            std::size_t src = 0;
            while (static_cast<std::size_t>(p[src]) != v) ++src;
            if (idx[src] < idx[v]) return false;
            if (idx[src] > idx[v]) break;
        }
    }
    return true;
}

class SearchState {
public:
    explicit SearchState(const SearchOptions& opts) : opts_(opts) {}

    void consider(const Instance& inst) {
        ++candidates_;
        GameContext ctx(inst);
        if (opts_.prune) {
            const Rational ub = spoa_upper_bound(ctx);
            std::lock_guard lock(mu_);
            if (result_.spoa && ub < *result_.spoa) {
                ++result_.pruned;
                return;
            }
        }
        try {
            EquilibriumReport rep = opts_.game == Game::ccc ? ccc_report(ctx, opts_.n_max)
                                                            : magnet_report(MagnetContext(std::move(ctx)), opts_.n_max);
            std::lock_guard lock(mu_);
            ++result_.evaluated;
            if (opts_.on_report) opts_.on_report(inst, rep);
            bool better = !result_.spoa || *rep.spoa > *result_.spoa;
            if (!better && *rep.spoa == *result_.spoa) {
                better = serialize_instance(inst) < serialize_instance(*result_.best_instance);
            }
            if (better) {
                result_.best_instance = inst;
                result_.spoa = rep.spoa;
                result_.profile = rep.worst_profile;
            }
        } catch (const GameError& e) {
            std::lock_guard lock(mu_);
            ++result_.evaluated;
            result_.failures.push_back({inst, e.what()});
        }
    }

    SearchResult finish() {
        result_.candidates = candidates_.load();
        std::sort(result_.failures.begin(), result_.failures.end(), [](const auto& a, const auto& b) {
            return serialize_instance(a.instance) < serialize_instance(b.instance);
        });
        return std::move(result_);
    }

private:
    const SearchOptions& opts_;
    std::mutex mu_;
    std::atomic<std::size_t> candidates_{0};
    SearchResult result_;
};

inline std::optional<Instance> make_candidate(int n, const std::vector<Edge>& edges, const std::vector<Rational>& grid,
                                              const std::vector<int>& idx, const SearchOptions& opts) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n));
    Rational total;
    for (int i : idx) {
        values.push_back(grid[static_cast<std::size_t>(i)]);
        total += values.back();
    }
    if (total <= opts.threshold) return std::nullopt;
    // The whole (connected) player set is then eligible.
    return validate_instance({n, edges, std::move(values), opts.threshold, Rational(1)});
}

template <typename Work>
void run_parallel(std::size_t count, int jobs, Work&& work) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (threads == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

inline std::vector<Edge> random_connected_graph(int n, std::mt19937_64& rng) {
    if (n <= kMaxEnumeratedGraphOrder) {
        // Uniform over isomorphism classes.
        static thread_local std::vector<std::vector<std::vector<Edge>>> cache(kMaxEnumeratedGraphOrder + 1);
        auto& graphs = cache[static_cast<std::size_t>(n)];
        if (graphs.empty()) graphs = connected_graphs(n);
        std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
        return graphs[pick(rng)];
    }
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng)) edges.emplace_back(a, b);
        PlayerMask seen = bit(0), frontier = bit(0);
        while (frontier) {
            PlayerMask next = 0;
            for (auto [a, b] : edges) {
                if (frontier & bit(a)) next |= bit(b);
                if (frontier & bit(b)) next |= bit(a);
            }
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == full_mask(n)) return edges;
    }
}

}  // namespace detail

/// Maximizes exact spoa over the requested graphs and grid values. The result
/// is independent of `jobs`: ties go to the smallest serialized instance, and
/// pruning only drops instances that cannot reach the current maximum.
[[nodiscard]] inline SearchResult worst_case_search(const SearchOptions& opts) {
    if (opts.game == Game::goldrush) throw GameError(ErrorCode::BadParams, "search covers ccc and magnet");
    if (opts.n_min < 2 || opts.n_max < opts.n_min || opts.n_max > 7)
        throw GameError(ErrorCode::BadParams, "need 2 <= n_min <= n_max <= 7");
    if (opts.threshold.sign() <= 0 || opts.eps.sign() <= 0)
        throw GameError(ErrorCode::NonPositiveParameter, "threshold and eps must be positive");
    std::vector<Rational> grid = opts.grid.empty() ? default_value_grid(opts.threshold, opts.eps) : opts.grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (const auto& v : grid)
        if (v.sign() < 0 || v >= opts.threshold)
            throw GameError(ErrorCode::BadParams, "grid values must lie in [0, T)");

    detail::SearchState state(opts);
    const int g = static_cast<int>(grid.size());

    for (int n = opts.n_min; n <= opts.n_max; ++n) {
        std::vector<std::vector<Edge>> graphs;
        if (opts.family) {
            if (*opts.family == GraphFamily::cycle && n < 3) continue;
            if (*opts.family == GraphFamily::cartwheel && n < 5) continue;
            graphs.push_back(gen_graph(*opts.family, n));
        }
        if (n <= opts.exhaustive_max) {
            if (!opts.family) graphs = connected_graphs(n);
            detail::run_parallel(graphs.size(), opts.jobs, [&](std::size_t gi) {
                const auto& edges = graphs[gi];
                const auto autos = detail::automorphisms(n, edges);
                std::vector<int> idx(static_cast<std::size_t>(n), 0);
                for (;;) {
                    if (detail::canonical_assignment(idx, autos))
                        if (auto inst = detail::make_candidate(n, edges, grid, idx, opts)) state.consider(*inst);
                    std::size_t pos = 0;
                    while (pos < idx.size() && ++idx[pos] == g) idx[pos++] = 0;
                    if (pos == idx.size()) break;
                }
            });
        } else if (opts.samples > 0) {
            std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(n));
            std::uniform_int_distribution<int> pick(0, g - 1);
            std::vector<Instance> sampled;
            for (int s = 0; s < opts.samples; ++s) {
                std::vector<Edge> edges = opts.family ? graphs.front() : detail::random_connected_graph(n, rng);
                std::vector<int> idx(static_cast<std::size_t>(n));
                for (auto& i : idx) i = pick(rng);
                if (auto inst = detail::make_candidate(n, edges, grid, idx, opts)) sampled.push_back(std::move(*inst));
            }
            detail::run_parallel(sampled.size(), opts.jobs, [&](std::size_t i) { state.consider(sampled[i]); });
        }
    }
    return state.finish();
}

}  // namespace grantgame
