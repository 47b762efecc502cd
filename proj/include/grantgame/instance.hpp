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
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grantgame/rational.hpp"

namespace grantgame {

using PlayerId = int;
/// Bit i set <=> player i is a member.
using PlayerMask = std::uint32_t;

/// Hard cap imposed by the 32-bit member masks.
inline constexpr int kMaxPlayers = 30;

enum class ErrorCode {
    DominantPlayer,
    InsufficientTotal,
    MalformedGraph,
    NonPositiveParameter,
    NoEligibleConsortium,
    TooLarge,
    IneligibleStart,
    NoStrongEquilibriumWithWinner,
    NotThreeNonzero,
    NoOutsideNonzero,
    BadParams,
    MalformedInput,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DominantPlayer: return "DominantPlayer";
        case ErrorCode::InsufficientTotal: return "InsufficientTotal";
        case ErrorCode::MalformedGraph: return "MalformedGraph";
        case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
        case ErrorCode::NoEligibleConsortium: return "NoEligibleConsortium";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::IneligibleStart: return "IneligibleStart";
        case ErrorCode::NoStrongEquilibriumWithWinner: return "NoStrongEquilibriumWithWinner";
        case ErrorCode::NotThreeNonzero: return "NotThreeNonzero";
        case ErrorCode::NoOutsideNonzero: return "NoOutsideNonzero";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

/// Domain error carrying a machine-readable code.
class GameError : public std::runtime_error {
public:
    GameError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

// ---------------------------------------------------------------------------
// Bit helpers

[[nodiscard]] constexpr int popcount(PlayerMask m) noexcept { return std::popcount(m); }
[[nodiscard]] constexpr PlayerMask bit(PlayerId i) noexcept { return PlayerMask{1} << i; }
[[nodiscard]] constexpr PlayerMask full_mask(int n) noexcept {
    return n >= 32 ? ~PlayerMask{0} : (PlayerMask{1} << n) - 1;
}
[[nodiscard]] constexpr PlayerId lowest(PlayerMask m) noexcept { return std::countr_zero(m); }

/// Calls f(i) for each member i in increasing order.
template <typename F>
constexpr void for_each_member(PlayerMask m, F&& f) {
    while (m != 0) {
        f(lowest(m));
        m &= m - 1;
    }
}

/// Lexicographic order of the sorted member lists (a proper prefix sorts first).
[[nodiscard]] constexpr bool lex_less(PlayerMask a, PlayerMask b) noexcept {
    while (a != 0 && b != 0) {
        PlayerId x = lowest(a), y = lowest(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// ---------------------------------------------------------------------------

/// A nonempty set of players kept as a sorted id list.
class Consortium {
public:
    Consortium() = default;
    Consortium(std::initializer_list<PlayerId> ids) : Consortium(std::vector<PlayerId>(ids)) {}
    explicit Consortium(std::vector<PlayerId> ids) : members_(std::move(ids)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.empty()) throw GameError(ErrorCode::MalformedInput, "empty consortium");
        if (members_.front() < 0 || members_.back() >= kMaxPlayers)
            throw GameError(ErrorCode::MalformedInput, "player id out of range");
    }

    static Consortium from_mask(PlayerMask m) {
        std::vector<PlayerId> ids;
        for_each_member(m, [&](PlayerId i) { ids.push_back(i); });
        return Consortium(std::move(ids));
    }

    [[nodiscard]] PlayerMask mask() const noexcept {
        PlayerMask m = 0;
        for (PlayerId i : members_) m |= bit(i);
        return m;
    }
    [[nodiscard]] std::span<const PlayerId> members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(PlayerId i) const noexcept {
        return std::binary_search(members_.begin(), members_.end(), i);
    }
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    friend bool operator==(const Consortium&, const Consortium&) = default;
    friend auto operator<=>(const Consortium& a, const Consortium& b) { return a.members_ <=> b.members_; }

    [[nodiscard]] std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(members_[i]);
        }
        return s + "}";
    }

private:
    std::vector<PlayerId> members_;
};

using Edge = std::pair<PlayerId, PlayerId>;

/// Unchecked instance description, as read from a file or built by hand.
struct InstanceData {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<Rational> values;
    Rational threshold;
    Rational prize{1};
};

/// A validated collaboration network with player values, threshold and prize.
/// Immutable once built; obtain one through validate_instance().
class Instance {
public:
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }
    [[nodiscard]] const Rational& value(PlayerId i) const { return values_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] const Rational& threshold() const noexcept { return threshold_; }
    [[nodiscard]] const Rational& prize() const noexcept { return prize_; }
    [[nodiscard]] PlayerMask neighbors(PlayerId i) const { return adjacency_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] PlayerMask all_players() const noexcept { return full_mask(n_); }
    [[nodiscard]] bool adjacent(PlayerId a, PlayerId b) const { return (neighbors(a) & bit(b)) != 0; }

    [[nodiscard]] InstanceData data() const { return {n_, edges_, values_, threshold_, prize_}; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    friend Instance validate_instance(InstanceData raw);
    Instance() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Rational> values_;
    Rational threshold_;
    Rational prize_;
    std::vector<PlayerMask> adjacency_;
};

/// Checks the standing assumptions: n >= 2, simple undirected graph over
/// 0..n-1, 0 <= v_i < T, sum of values > T, T > 0 and M > 0. Edges are
/// normalized to (min, max) and sorted.
inline Instance validate_instance(InstanceData raw) {
    if (raw.n < 2) throw GameError(ErrorCode::MalformedGraph, "need at least 2 players");
    if (raw.n > kMaxPlayers)
        throw GameError(ErrorCode::TooLarge, "at most " + std::to_string(kMaxPlayers) + " players supported");
    if (raw.values.size() != static_cast<std::size_t>(raw.n))
        throw GameError(ErrorCode::MalformedInput, "values length differs from n");

    Instance inst;
    inst.n_ = raw.n;
    inst.adjacency_.assign(static_cast<std::size_t>(raw.n), 0);
    for (auto [a, b] : raw.edges) {
        if (a < 0 || b < 0 || a >= raw.n || b >= raw.n)
            throw GameError(ErrorCode::MalformedGraph, "edge references unknown player");
        if (a == b) throw GameError(ErrorCode::MalformedGraph, "self-loop at " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (inst.adjacency_[static_cast<std::size_t>(a)] & bit(b))
            throw GameError(ErrorCode::MalformedGraph,
                            "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
        inst.adjacency_[static_cast<std::size_t>(a)] |= bit(b);
        inst.adjacency_[static_cast<std::size_t>(b)] |= bit(a);
        inst.edges_.emplace_back(a, b);
    }
    std::sort(inst.edges_.begin(), inst.edges_.end());

    if (raw.threshold.sign() <= 0) throw GameError(ErrorCode::NonPositiveParameter, "threshold must be positive");
    if (raw.prize.sign() <= 0) throw GameError(ErrorCode::NonPositiveParameter, "prize must be positive");
    Rational total;
    for (int i = 0; i < raw.n; ++i) {
        const Rational& v = raw.values[static_cast<std::size_t>(i)];
        if (v.sign() < 0)
            throw GameError(ErrorCode::NonPositiveParameter, "value of player " + std::to_string(i) + " is negative");
        if (v >= raw.threshold)
            throw GameError(ErrorCode::DominantPlayer,
                            "player " + std::to_string(i) + " has value " + v.str() + " >= threshold");
        total += v;
    }
    if (total <= raw.threshold)
        throw GameError(ErrorCode::InsufficientTotal,
                        "total value " + total.str() + " does not exceed threshold " + raw.threshold.str());

    inst.values_ = std::move(raw.values);
    inst.threshold_ = raw.threshold;
    inst.prize_ = raw.prize;
    return inst;
}

/// Throws unless every member of `s` is a player of `inst`.
inline void check_members(const Instance& inst, const Consortium& s) {
    if (s.empty()) throw GameError(ErrorCode::MalformedInput, "empty consortium");
    if (s.members().back() >= inst.n())
        throw GameError(ErrorCode::MalformedInput, "consortium " + s.str() + " names an unknown player");
}

/// Vertices of `within` reachable from `from` using only vertices of `within`.
[[nodiscard]] inline PlayerMask reachable(const Instance& inst, PlayerMask from, PlayerMask within) {
    PlayerMask seen = from & within;
    PlayerMask frontier = seen;
    while (frontier != 0) {
        PlayerMask next = 0;
        for_each_member(frontier, [&](PlayerId i) { next |= inst.neighbors(i); });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Whether the subgraph induced by `m` is connected. The empty set is not.
[[nodiscard]] inline bool is_connected(const Instance& inst, PlayerMask m) {
    if (m == 0) return false;
    return reachable(inst, m & (~m + 1), m) == m;
}

[[nodiscard]] inline bool is_connected(const Instance& inst, const Consortium& s) {
    check_members(inst, s);
    return is_connected(inst, s.mask());
}

struct Evaluation {
    Rational sum;
    Rational avg;
};

[[nodiscard]] inline Rational sum_of(const Instance& inst, PlayerMask m) {
    Rational sum;
    for_each_member(m, [&](PlayerId i) { sum += inst.value(i); });
    return sum;
}

[[nodiscard]] inline Evaluation evaluate(const Instance& inst, const Consortium& s) {
    check_members(inst, s);
    Rational sum = sum_of(inst, s.mask());
    return {sum, sum / Rational(static_cast<Rational::int_type>(s.size()))};
}

[[nodiscard]] inline bool is_eligible(const Instance& inst, PlayerMask m) {
    return is_connected(inst, m) && sum_of(inst, m) >= inst.threshold();
}

[[nodiscard]] inline bool is_eligible(const Instance& inst, const Consortium& s) {
    check_members(inst, s);
    return is_eligible(inst, s.mask());
}

}  // namespace grantgame
