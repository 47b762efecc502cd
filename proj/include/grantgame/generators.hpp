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
#include <string>
#include <string_view>
#include <vector>

#include "grantgame/instance.hpp"

namespace grantgame {

enum class GraphFamily { complete, line, cycle, cartwheel };

[[nodiscard]] inline std::optional<GraphFamily> parse_graph_family(std::string_view s) {
    if (s == "complete" || s == "clique") return GraphFamily::complete;
    if (s == "line") return GraphFamily::line;
    if (s == "cycle") return GraphFamily::cycle;
    if (s == "cartwheel") return GraphFamily::cartwheel;
    return std::nullopt;
}

[[nodiscard]] constexpr std::string_view family_name(GraphFamily f) noexcept {
    switch (f) {
        case GraphFamily::complete: return "complete";
        case GraphFamily::line: return "line";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::cartwheel: return "cartwheel";
    }
    return "?";
}

/// Edge list of a standard family on players 0..n-1, sorted.
///
/// The cartwheel is the cycle 0..n-1 plus the chords {0, ceil(n/2)} and
/// {n-1, ceil(n/2)-1}; the endpoints of each chord are cycle neighbours of
/// the other chord's endpoints.
[[nodiscard]] inline std::vector<Edge> gen_graph(GraphFamily family, int n) {
    if (n < 2 || n > kMaxPlayers) throw GameError(ErrorCode::BadParams, "n out of range");
    std::vector<Edge> edges;
    switch (family) {
        case GraphFamily::complete:
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
            break;
        case GraphFamily::line:
            for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
            break;
        case GraphFamily::cycle:
        case GraphFamily::cartwheel: {
            if (n < 3) throw GameError(ErrorCode::BadParams, "cycle needs n >= 3");
            if (family == GraphFamily::cartwheel && n < 5)
                throw GameError(ErrorCode::BadParams, "cartwheel needs n >= 5");
            for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
            edges.emplace_back(0, n - 1);
            if (family == GraphFamily::cartwheel) {
                const int half = (n + 1) / 2;
                edges.emplace_back(0, half);
                edges.emplace_back(half - 1, n - 1);
            }
            break;
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

/// Parameters for the named constructions. Unused fields are ignored.
struct PaperParams {
    std::optional<int> n;
    std::optional<int> k;
    Rational threshold{12};
    Rational eps{1};
    Rational prize{1};
    /// Value of the third nonzero player in the cartwheel constructions.
    std::optional<Rational> x;
};

inline constexpr std::string_view kPaperInstances[] = {
    "ccc-clique-lower", "magnet-clique-lower", "line-worstcase", "goldrush-worst", "cartwheel-3nz", "cartwheel-3nz-k3",
};

[[nodiscard]] inline bool is_paper_instance(std::string_view name) {
    for (auto p : kPaperInstances)
        if (p == name) return true;
    return false;
}

namespace detail {

inline int require(const std::optional<int>& v, int min, const char* what) {
    if (!v) throw GameError(ErrorCode::BadParams, std::string(what) + " is required");
    if (*v < min) throw GameError(ErrorCode::BadParams, std::string(what) + " must be >= " + std::to_string(min));
    return *v;
}

inline Instance finish(int n, std::vector<Edge> edges, std::vector<Rational> values, const PaperParams& p) {
    try {
        return validate_instance({n, std::move(edges), std::move(values), p.threshold, p.prize});
    } catch (const GameError& e) {
        throw GameError(ErrorCode::BadParams, e.what());
    }
}

}  // namespace detail

/// Builds one of the extremal constructions by name:
///
///  - ccc-clique-lower(k): clique of k+1; k players at T/(k-1) - eps, one at k*eps.
///  - magnet-clique-lower(k): clique of k+1; k-2 players at T/(k-1), then
///    T/(k-1) - eps, T/k and eps.
///  - line-worstcase(n): line of 2n-1 players valued
///    [T(n-1)/n, 0 x (n-2), T - eps, 0 x (n-2), eps].
///  - goldrush-worst(n): clique; T/2 + eps, T/2, and n-2 distinct values
///    proportional to 1..n-2 that sum to eps.
///  - cartwheel-3nz(n, x): cartwheel with eps at node 1, T - eps at node 3, x at node 6.
///  - cartwheel-3nz-k3(n, x): cartwheel with eps at node 1, T - eps at node 3, x at node n-1.
[[nodiscard]] inline Instance paper_instance(std::string_view name, const PaperParams& p) {
    const Rational& t = p.threshold;
    const Rational& eps = p.eps;
    if (eps.sign() <= 0) throw GameError(ErrorCode::BadParams, "eps must be positive");
    if (name == "ccc-clique-lower") {
        const int k = detail::require(p.k, 2, "k");
        std::vector<Rational> values(static_cast<std::size_t>(k), t / Rational(k - 1) - eps);
        values.push_back(Rational(k) * eps);
        return detail::finish(k + 1, gen_graph(GraphFamily::complete, k + 1), std::move(values), p);
    }
    if (name == "magnet-clique-lower") {
        const int k = detail::require(p.k, 2, "k");
        std::vector<Rational> values(static_cast<std::size_t>(k - 2), t / Rational(k - 1));
        values.push_back(t / Rational(k - 1) - eps);
        values.push_back(t / Rational(k));
        values.push_back(eps);
        return detail::finish(k + 1, gen_graph(GraphFamily::complete, k + 1), std::move(values), p);
    }
    if (name == "line-worstcase") {
        const int n = detail::require(p.n, 2, "n");
        std::vector<Rational> values;
        values.push_back(t * Rational(n - 1, n));
        values.insert(values.end(), static_cast<std::size_t>(n - 2), Rational{});
        values.push_back(t - eps);
        values.insert(values.end(), static_cast<std::size_t>(n - 2), Rational{});
        values.push_back(eps);
        const int size = 2 * n - 1;
        return detail::finish(size, gen_graph(GraphFamily::line, size), std::move(values), p);
    }
    if (name == "goldrush-worst") {
        const int n = detail::require(p.n, 2, "n");
        std::vector<Rational> values{t / Rational(2) + eps, t / Rational(2)};
        const int rest = n - 2;
        for (int j = 1; j <= rest; ++j) values.push_back(eps * Rational(2 * j, rest * (rest + 1)));
        return detail::finish(n, gen_graph(GraphFamily::complete, n), std::move(values), p);
    }
    if (name == "cartwheel-3nz" || name == "cartwheel-3nz-k3") {
        const int n = detail::require(p.n ? p.n : std::optional<int>(9), 7, "n");
        if (!p.x) throw GameError(ErrorCode::BadParams, "x is required");
        std::vector<Rational> values(static_cast<std::size_t>(n), Rational{});
        values[1] = eps;
        values[3] = t - eps;
        values[name == "cartwheel-3nz" ? 6 : static_cast<std::size_t>(n - 1)] = *p.x;
        return detail::finish(n, gen_graph(GraphFamily::cartwheel, n), std::move(values), p);
    }
    throw GameError(ErrorCode::BadParams, "unknown construction: " + std::string(name));
}

}  // namespace grantgame
