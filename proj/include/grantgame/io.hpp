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

// JSON encodings. Rationals are integers or "p/q" strings in instance files,
// and always strings in reports, so no machine-readable field is a float.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "grantgame/game.hpp"
#include "grantgame/goldrush.hpp"
#include "grantgame/instance.hpp"
#include "grantgame/subsets.hpp"

namespace grantgame {

using Json = nlohmann::ordered_json;

[[nodiscard]] inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw GameError(ErrorCode::MalformedInput, e.what());
        }
    }
    throw GameError(ErrorCode::MalformedInput, "rational must be an integer or a \"p/q\" string, got " + j.dump());
}

/// Integers stay JSON integers; anything else becomes "p/q".
[[nodiscard]] inline Json rational_to_json(const Rational& r) {
    if (r.is_integer()) return Json(r.num());
    return Json(r.str());
}

/// Reads the raw fields without checking game assumptions.
[[nodiscard]] inline InstanceData instance_data_from_json(const Json& j) {
    if (!j.is_object()) throw GameError(ErrorCode::MalformedInput, "instance must be a JSON object");
    for (const char* key : {"n", "edges", "values", "threshold", "prize"})
        if (!j.contains(key)) throw GameError(ErrorCode::MalformedInput, std::string("missing field \"") + key + "\"");
    InstanceData d;
    if (!j["n"].is_number_integer()) throw GameError(ErrorCode::MalformedInput, "\"n\" must be an integer");
    d.n = j["n"].get<int>();
    if (!j["edges"].is_array()) throw GameError(ErrorCode::MalformedInput, "\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw GameError(ErrorCode::MalformedGraph, "edge must be a pair of integers: " + e.dump());
        d.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (!j["values"].is_array()) throw GameError(ErrorCode::MalformedInput, "\"values\" must be an array");
    for (const auto& v : j["values"]) d.values.push_back(rational_from_json(v));
    d.threshold = rational_from_json(j["threshold"]);
    d.prize = rational_from_json(j["prize"]);
    return d;
}

[[nodiscard]] inline Instance instance_from_json(const Json& j) { return validate_instance(instance_data_from_json(j)); }

[[nodiscard]] inline Json to_json(const Instance& inst) {
    Json j;
    j["n"] = inst.n();
    Json edges = Json::array();
    for (auto [a, b] : inst.edges()) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    Json values = Json::array();
    for (const auto& v : inst.values()) values.push_back(rational_to_json(v));
    j["values"] = std::move(values);
    j["threshold"] = rational_to_json(inst.threshold());
    j["prize"] = rational_to_json(inst.prize());
    return j;
}

/// Canonical text form: one line, sorted edges, no insignificant whitespace.
[[nodiscard]] inline std::string serialize_instance(const Instance& inst) { return to_json(inst).dump() + "\n"; }

[[nodiscard]] inline Instance parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw GameError(ErrorCode::MalformedInput, e.what());
    }
    return instance_from_json(j);
}

[[nodiscard]] inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GameError(ErrorCode::MalformedInput, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

// ---------------------------------------------------------------------------
// Report encodings

[[nodiscard]] inline Json members_json(const Consortium& c) {
    Json a = Json::array();
    for (PlayerId i : c) a.push_back(i);
    return a;
}

[[nodiscard]] inline std::string approx(const Rational& r) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "~%.6f", r.to_double());
    return buf;
}

[[nodiscard]] inline Json to_json(const SowResult& s) {
    Json j;
    j["members"] = members_json(s.consortium);
    j["avg"] = s.avg.str();
    j["k"] = s.size;
    return j;
}

[[nodiscard]] inline Json to_json(const ProposalProfile& p) {
    Json a = Json::array();
    for (const auto& b : p.consortia()) a.push_back(members_json(b));
    return a;
}

[[nodiscard]] inline Json to_json(const ClosureTrace& t) {
    Json rounds = Json::array();
    for (const auto& r : t.rounds) {
        Json jr;
        jr["winner_before"] = members_json(r.winner_before);
        Json appeals = Json::array();
        for (const auto& x : r.accepted_appeals) appeals.push_back(members_json(x));
        jr["accepted_appeals"] = std::move(appeals);
        jr["winner_after"] = members_json(r.winner_after);
        rounds.push_back(std::move(jr));
    }
    Json j;
    j["rounds"] = std::move(rounds);
    return j;
}

[[nodiscard]] inline Json to_json(const Outcome& o) {
    Json j;
    j["winner"] = o.winner ? members_json(*o.winner) : Json(nullptr);
    Json u = Json::array();
    for (const auto& x : o.utilities) u.push_back(x.str());
    j["utilities"] = std::move(u);
    return j;
}

[[nodiscard]] inline Json to_json(const EquilibriumReport& r) {
    Json j;
    j["sow"] = to_json(r.sow);
    Json winners = Json::array();
    for (const auto& w : r.se_winners) winners.push_back(members_json(w));
    j["se_winners"] = std::move(winners);
    j["spoa"] = r.spoa ? Json(r.spoa->str()) : Json(nullptr);
    j["spos"] = r.spos ? Json(r.spos->str()) : Json(nullptr);
    j["spoa_approx"] = r.spoa ? Json(approx(*r.spoa)) : Json(nullptr);
    j["spos_approx"] = r.spos ? Json(approx(*r.spos)) : Json(nullptr);
    j["worst_profile"] = r.worst_profile ? to_json(*r.worst_profile) : Json(nullptr);
    j["best_profile"] = r.best_profile ? to_json(*r.best_profile) : Json(nullptr);
    j["profiles"] = r.profiles;
    j["equilibria"] = r.equilibria;
    j["no_winner_equilibria"] = r.no_winner_equilibria;
    if (!r.traces.empty()) {
        Json traces = Json::array();
        for (const auto& t : r.traces) traces.push_back(to_json(t));
        j["traces"] = std::move(traces);
    }
    return j;
}

[[nodiscard]] inline Json to_json(const GoldrushReport& r) {
    Json j;
    j["sow"] = to_json(r.sow);
    Json winners = Json::array();
    for (const auto& w : r.nash_winners) winners.push_back(w ? members_json(*w) : Json(nullptr));
    j["nash_winners"] = std::move(winners);
    j["poa"] = r.poa ? Json(r.poa->str()) : Json(nullptr);
    j["poa_approx"] = r.poa ? Json(approx(*r.poa)) : Json(nullptr);
    j["poa_unbounded"] = r.poa_unbounded;
    j["labelings"] = r.labelings;
    j["nash_equilibria"] = r.nash_equilibria;
    return j;
}

}  // namespace grantgame
