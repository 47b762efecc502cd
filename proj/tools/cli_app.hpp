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

// The grantgame command line. run() is separate from main() so tests can
// drive it with in-memory streams.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "grantgame/grantgame.hpp"

namespace grantgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Flag-level usage problem detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string input;
    std::string output;
    std::string game;
    std::string family;
    std::optional<int> n;
    std::string k;
    std::optional<std::string> threshold;
    std::string eps;
    std::uint64_t seed = 1;
    int limit = kDefaultEnumerationLimit;
    std::string grid = "default";
    bool force = false;
    int jobs = 0;
    std::string values;
    std::optional<std::string> x;
    std::string start;
    std::string profile;
    std::string labels;
    int samples = 0;
    bool no_prune = false;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

inline Rational parse_rational(const std::string& s, const char* flag) {
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": not a rational: " + s);
    }
}

inline int parse_int(const std::string& s, const char* flag) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(flag) + ": not an integer: " + s);
}

inline std::vector<int> parse_ids(const std::string& s, const char* flag) {
    std::vector<int> ids;
    for (const auto& part : split(s, ',')) ids.push_back(parse_int(part, flag));
    if (ids.empty()) throw UsageError(std::string(flag) + " needs at least one id");
    return ids;
}

/// "a", "a..b" or "a-b".
inline std::pair<int, int> parse_range(const std::string& s, const char* flag) {
    auto dots = s.find("..");
    if (dots != std::string::npos) return {parse_int(s.substr(0, dots), flag), parse_int(s.substr(dots + 2), flag)};
    auto dash = s.find('-', 1);
    if (dash != std::string::npos) return {parse_int(s.substr(0, dash), flag), parse_int(s.substr(dash + 1), flag)};
    int v = parse_int(s, flag);
    return {v, v};
}

inline Game require_game(const Flags& f) {
    if (f.game.empty()) throw UsageError("--game is required");
    auto g = parse_game(f.game);
    if (!g) throw UsageError("--game must be goldrush, ccc or magnet");
    return *g;
}

inline Instance require_instance(const Flags& f) {
    if (f.input.empty()) throw UsageError("-i/--input is required");
    return load_instance(f.input);
}

inline int effective_limit(const Flags& f) { return f.force ? kMaxPlayers : f.limit; }

inline int effective_jobs(const Flags& f) {
    if (f.jobs > 0) return f.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// "0,1|2|3" lists blocks separated by '|'.
inline ProposalProfile parse_profile(const Instance& inst, const std::string& s) {
    std::vector<Consortium> blocks;
    for (const auto& part : split(s, '|')) blocks.emplace_back(parse_ids(part, "--profile"));
    for (const auto& b : blocks) check_members(inst, b);
    return ProposalProfile::from_consortia(inst.n(), blocks);
}

inline void emit(const Flags& f, std::ostream& out, const std::string& text) {
    if (f.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(f.output);
    if (!file) throw GameError(ErrorCode::MalformedInput, "cannot write " + f.output);
    file << text;
}

inline std::string json_line(const Json& j) { return j.dump() + "\n"; }

// --- verbs ------------------------------------------------------------------

inline std::string do_sow(const Flags& f) { return json_line(to_json(find_sow(require_instance(f)))); }

inline std::string do_outcome(const Flags& f) {
    const Game game = require_game(f);
    if (game == Game::goldrush && f.labels.empty()) throw UsageError("outcome --game goldrush needs --labels");
    if (game != Game::goldrush && f.profile.empty()) throw UsageError("outcome needs --profile, e.g. \"0,1|2|3\"");
    const Instance inst = require_instance(f);
    if (game == Game::goldrush) {
        Labeling lab{parse_ids(f.labels, "--labels")};
        return json_line(to_json(goldrush_outcome(inst, lab)));
    }
    const ProposalProfile p = parse_profile(inst, f.profile);
    if (game == Game::ccc) return json_line(to_json(ccc_outcome(inst, p)));
    auto mo = magnet_outcome(inst, p);
    Json j = to_json(mo.outcome);
    j["trace"] = mo.trace ? to_json(*mo.trace) : Json(nullptr);
    return json_line(j);
}

inline std::string do_equilibria(const Flags& f) {
    const Game game = require_game(f);
    const Instance inst = require_instance(f);
    if (game == Game::goldrush) return json_line(to_json(goldrush_report(inst, effective_limit(f))));
    return json_line(to_json(strong_report(game, inst, effective_limit(f))));
}

inline std::string do_spoa(const Flags& f) {
    const Game game = require_game(f);
    const Instance inst = require_instance(f);
    Json j;
    if (game == Game::goldrush) {
        auto rep = goldrush_report(inst, effective_limit(f));
        j["poa"] = rep.poa ? Json(rep.poa->str()) : Json(nullptr);
        j["poa_approx"] = rep.poa ? Json(approx(*rep.poa)) : Json(nullptr);
        j["poa_unbounded"] = rep.poa_unbounded;
        return json_line(j);
    }
    auto rep = strong_report(game, inst, effective_limit(f));
    j["spoa"] = rep.spoa->str();
    j["spoa_approx"] = approx(*rep.spoa);
    j["spos"] = rep.spos->str();
    j["spos_approx"] = approx(*rep.spos);
    return json_line(j);
}

inline std::string do_closure(const Flags& f) {
    if (f.start.empty()) throw UsageError("closure needs --start, e.g. --start 2,3,4");
    const Instance inst = require_instance(f);
    auto res = magnet_closure(inst, Consortium(parse_ids(f.start, "--start")));
    Json j;
    j["final"] = members_json(res.final);
    j["trace"] = to_json(res.trace);
    return json_line(j);
}

inline PaperParams paper_params(const Flags& f) {
    PaperParams p;
    p.n = f.n;
    if (!f.k.empty()) p.k = parse_int(f.k, "--k");
    if (f.threshold) p.threshold = parse_rational(*f.threshold, "--T");
    if (!f.eps.empty()) p.eps = parse_rational(f.eps, "--eps");
    if (f.x) p.x = parse_rational(*f.x, "--x");
    return p;
}

inline std::string do_gen(const Flags& f) {
    if (f.family.empty()) throw UsageError("gen needs --family");
    if (is_paper_instance(f.family)) return serialize_instance(paper_instance(f.family, paper_params(f)));
    auto family = parse_graph_family(f.family);
    if (!family) throw UsageError("unknown --family: " + f.family);
    if (!f.n) throw UsageError("gen --family " + f.family + " needs --n");
    if (f.values.empty()) throw UsageError("gen --family " + f.family + " needs --values");
    std::vector<Rational> values;
    for (const auto& v : split(f.values, ',')) values.push_back(parse_rational(v, "--values"));
    const PaperParams p = paper_params(f);
    return serialize_instance(validate_instance({*f.n, gen_graph(*family, *f.n), std::move(values), p.threshold, p.prize}));
}

inline std::string do_sweep(const Flags& f) {
    const Game game = require_game(f);
    if (f.family != "clique" && f.family != "complete" && f.family != "line")
        throw UsageError("sweep needs --family clique or line");
    if (f.k.empty()) throw UsageError("sweep needs --k, e.g. --k 2..4");
    auto [lo, hi] = parse_range(f.k, "--k");
    SweepOptions opts;
    if (!f.eps.empty()) {
        opts.eps.clear();
        for (const auto& e : split(f.eps, ',')) opts.eps.push_back(parse_rational(e, "--eps"));
    }
    opts.limit = f.force ? kMaxPlayers : std::max(f.limit, 2 * hi - 1);
    auto rows = spoa_sweep(f.family == "line" ? SweepFamily::line : SweepFamily::clique, lo, hi, game, opts);
    std::ostringstream os;
    write_sweep_csv(os, rows);
    return os.str();
}

inline std::string do_search(const Flags& f) {
    SearchOptions o;
    o.game = require_game(f);
    if (!f.family.empty() && f.family != "all") {
        o.family = parse_graph_family(f.family);
        if (!o.family) throw UsageError("unknown --family: " + f.family);
    }
    if (!f.n) throw UsageError("search needs --n (largest graph order)");
    o.n_max = *f.n;
    if (f.threshold) o.threshold = parse_rational(*f.threshold, "--T");
    if (!f.eps.empty()) o.eps = parse_rational(f.eps, "--eps");
    if (!f.values.empty())
        for (const auto& v : split(f.values, ',')) o.grid.push_back(parse_rational(v, "--values"));
    o.seed = f.seed;
    o.samples = f.samples;
    o.exhaustive_max = f.samples > 0 ? std::min(o.n_max - 1, kMaxEnumeratedGraphOrder) : kMaxEnumeratedGraphOrder;
    o.jobs = effective_jobs(f);
    o.prune = !f.no_prune;
    auto r = worst_case_search(o);
    Json j;
    j["instance"] = r.best_instance ? to_json(*r.best_instance) : Json(nullptr);
    j["spoa"] = r.spoa ? Json(r.spoa->str()) : Json(nullptr);
    j["spoa_approx"] = r.spoa ? Json(approx(*r.spoa)) : Json(nullptr);
    j["profile"] = r.profile ? to_json(*r.profile) : Json(nullptr);
    j["candidates"] = r.candidates;
    j["evaluated"] = r.evaluated;
    j["pruned"] = r.pruned;
    j["without_equilibrium"] = r.failures.size();
    return json_line(j);
}

inline std::string do_verify(const Flags& f) {
    auto grid = parse_verify_grid(f.grid);
    if (!grid) throw UsageError("--grid must be default or full");
    std::ostringstream os;
    for (const auto& v : verify_bounds(*grid, effective_jobs(f))) write_verdict(os, v);
    return os.str();
}

}  // namespace detail

/// Parses argv and runs one verb. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Consortium-formation game solver"};
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", f.input, "Instance JSON file");
        sub->add_option("-o,--output", f.output, "Write output here instead of stdout");
        sub->add_option("--game", f.game, "goldrush | ccc | magnet");
        sub->add_option("--family", f.family, "Graph family or named construction");
        sub->add_option("--n", f.n, "Number of players");
        sub->add_option("--k", f.k, "Consortium size, or a range a..b for sweep");
        sub->add_option("--T", f.threshold, "Threshold T");
        sub->add_option("--eps", f.eps, "Epsilon (comma list for sweep)");
        sub->add_option("--seed", f.seed, "Random seed");
        sub->add_option("--limit", f.limit, "Enumeration limit on n")->check(CLI::PositiveNumber);
        sub->add_option("--grid", f.grid, "Theorem grid: default | full");
        sub->add_flag("--force", f.force, "Lift the enumeration limit");
        sub->add_option("--jobs", f.jobs, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
        sub->add_option("--values", f.values, "Comma-separated values (gen) or value grid (search)");
        sub->add_option("--x", f.x, "Third nonzero value for the cartwheel constructions");
    };

    struct Verb {
        const char* name;
        const char* help;
        std::string (*fn)(const Flags&);
    };
    const Verb verbs[] = {
        {"sow", "Social-optimum winner", detail::do_sow},
        {"outcome", "Outcome of one profile", detail::do_outcome},
        {"equilibria", "Equilibrium report", detail::do_equilibria},
        {"spoa", "Price of anarchy and stability", detail::do_spoa},
        {"closure", "MAGNET appeal closure trace", detail::do_closure},
        {"gen", "Write an instance file", detail::do_gen},
        {"sweep", "spoa against k as CSV", detail::do_sweep},
        {"search", "Worst-case instance search", detail::do_search},
        {"verify", "Theorem grid verdicts", detail::do_verify},
    };
    std::vector<std::pair<CLI::App*, const Verb*>> subs;
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        add_common(sub);
        subs.emplace_back(sub, &v);
    }
    for (auto& [sub, v] : subs) {
        if (std::string(v->name) == "closure") sub->add_option("--start", f.start, "Round-1 winner ids, e.g. 2,3,4");
        if (std::string(v->name) == "outcome") {
            sub->add_option("--profile", f.profile, "Blocks such as \"0,1|2|3\"");
            sub->add_option("--labels", f.labels, "Gold-rush labels such as 0,0,1,1");
        }
        if (std::string(v->name) == "search") {
            sub->add_option("--samples", f.samples, "Random instances for the largest order");
            sub->add_flag("--no-prune", f.no_prune, "Evaluate every candidate");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (auto& [sub, v] : subs) {
        if (!sub->parsed()) continue;
        try {
            detail::emit(f, out, v->fn(f));
            return kExitOk;
        } catch (const UsageError& e) {
            err << "usage: " << e.what() << '\n';
            return kExitUsage;
        } catch (const GameError& e) {
            err << "error: " << e.what() << '\n';
            return kExitDomain;
        } catch (const std::overflow_error& e) {
            err << "error: ArithmeticOverflow: " << e.what() << '\n';
            return kExitDomain;
        }
    }
    return kExitUsage;
}

}  // namespace grantgame::cli
