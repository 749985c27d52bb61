/*
 * Copyright 2026 The enarena authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "enarena/arena_json.hpp"
#include "enarena/reduce.hpp"
#include "enarena/verify.hpp"

using json = nlohmann::ordered_json;
using namespace enarena;

namespace {

constexpr int kExitWin = 0;
constexpr int kExitError = 1;
constexpr int kExitLose = 2;

struct QueryFlags {
    std::string file;
    std::string kind = "L";
    Level L = 0;
    std::optional<Level> U, W, S, V;
    std::string measure = "count";
    std::string objective = "reach";
    bool oracle = false;
};

ConstraintSpec to_spec(const QueryFlags& q) {
    ConstraintSpec s;
    if (q.kind == "L")
        s.kind = ConstraintKind::L;
    else if (q.kind == "LU")
        s.kind = ConstraintKind::LU;
    else if (q.kind == "LW")
        s.kind = ConstraintKind::LW;
    else if (q.kind == "LV")
        s.kind = ConstraintKind::LV;
    else
        throw ArenaError(ArenaErrorKind::Invalid, "unknown kind '" + q.kind + "'");
    s.L = q.L;
    s.U = q.U;
    s.W = q.W;
    s.S = q.S;
    s.V = q.V;
    if (s.kind == ConstraintKind::LV) {
        if (q.measure == "count")
            s.measure = Measure::Count;
        else if (q.measure == "cons")
            s.measure = Measure::Consecutive;
        else if (q.measure == "sum")
            s.measure = Measure::Sum;
        else
            throw ArenaError(ArenaErrorKind::Invalid, "unknown measure '" + q.measure + "'");
    }
    if (q.objective == "reach")
        s.objective = Objective::Reach;
    else if (q.objective == "inf")
        s.objective = Objective::InfiniteRun;
    else
        throw ArenaError(ArenaErrorKind::Invalid, "unknown objective '" + q.objective + "'");
    return s;
}

json query_json(const QueryFlags& q) {
    json j;
    j["file"] = q.file;
    j["kind"] = q.kind;
    j["L"] = q.L;
    j["U"] = q.U ? json(*q.U) : json(nullptr);
    j["W"] = q.W ? json(*q.W) : json(nullptr);
    j["S"] = q.S ? json(*q.S) : json(nullptr);
    j["V"] = q.V ? json(*q.V) : json(nullptr);
    j["measure"] = q.kind == "LV" ? json(q.measure) : json(nullptr);
    j["objective"] = q.objective;
    j["oracle"] = q.oracle;
    return j;
}

json run_json(const Arena& a, const Run& r) {
    json j;
    j["type"] = "run";
    j["states"] = json::array();
    for (StateId q : r.states) j["states"].push_back(a.names[q]);
    j["levels"] = r.levels;
    return j;
}

json witness_json(const Arena& a, const LwWitness& w) {
    json j;
    j["type"] = "segments";
    j["from"] = a.names[w.from];
    j["start"] = w.startLevel;
    j["segments"] = json::array();
    for (const auto& seg : w.segments) {
        if (const auto* p = std::get_if<LwWitness::Path>(&seg)) {
            json edges = json::array();
            for (int e : p->edges)
                edges.push_back(a.names[a.edges[e].src] + " " + std::to_string(a.edges[e].weight) +
                                " " + a.names[a.edges[e].dst]);
            j["segments"].push_back({{"path", edges}});
        } else {
            const auto& jp = std::get<LwWitness::Jump>(seg);
            json cyc = json::array();
            for (int e : jp.cycle)
                cyc.push_back(a.names[a.edges[e].src] + " " + std::to_string(a.edges[e].weight) +
                              " " + a.names[a.edges[e].dst]);
            j["segments"].push_back(
                {{"jump", {{"state", a.names[jp.state]}, {"level", jp.level}, {"reps", jp.reps}, {"cycle", cyc}}}});
        }
    }
    j["expandedLength"] = w.expanded_length();
    return j;
}

struct SolveOutcome {
    bool p1Wins = false;
    std::optional<Run> run;             // concrete witness when one exists
    std::optional<LwWitness> compact;   // compact form for the poly solver
    std::size_t configs = 0;
    std::size_t labels = 0;
};

SolveOutcome dispatch_solve(const Arena& a, const QueryFlags& q) {
    ConstraintSpec spec = to_spec(q);
    spec.validate(a);
    SolveOutcome out;
    switch (spec.kind) {
        case ConstraintKind::L: {
            if (spec.objective == Objective::InfiniteRun) {
                out.p1Wins = solve_l_energy(a, spec.L).winner[a.initial] == Player::One;
            } else if (q.oracle || a.one_player()) {
                LReachOracle o = l_reach_oracle(a, spec.L);
                out.p1Wins = o.p1WinsInit;
                out.configs = o.ex.size();
                if (out.p1Wins && a.one_player()) {
                    auto w = shortest_witness(o.ex);
                    if (w) out.run = make_run(a, spec, a.initial, spec.L, w->edges);
                }
            } else {
                // two-player reachability goes through the energy reduction
                ReductionOutput red = reduce_reach_to_energy(a);
                out.p1Wins =
                    solve_l_energy(red.arena, spec.L).winner[red.arena.initial] == Player::One;
            }
            break;
        }
        case ConstraintKind::LU: {
            ExpandedArena ex = build_lu(a, spec.L, *spec.U);
            out.configs = ex.size();
            WinningRegion r = oracle_solve(ex, spec.objective);
            out.p1Wins = r.winner[ex.init] == Player::One;
            if (out.p1Wins && spec.objective == Objective::Reach && a.one_player())
                out.run = shortest_witness(ex);
            break;
        }
        case ConstraintKind::LW: {
            if (spec.objective == Objective::Reach && a.one_player() && !q.oracle) {
                auto r = solve_lw_reach_1p(a, spec.L, *spec.W);
                out.p1Wins = r.witness.has_value();
                out.labels = r.labelsStored;
                if (r.witness) {
                    out.compact = r.witness;
                    out.run = expand_witness(a, spec.L, *spec.W, *r.witness);
                }
            } else {
                LwGameResult r = solve_lw_2p(a, spec.L, *spec.W, spec.objective);
                out.p1Wins = r.p1WinsInit;
                out.configs = r.ex.size();
                if (out.p1Wins && spec.objective == Objective::Reach && a.one_player())
                    out.run = shortest_witness(r.ex);
            }
            break;
        }
        case ConstraintKind::LV: {
            LvResult r = solve_lv(a, spec.L, *spec.S, *spec.U, *spec.V, *spec.measure, spec.objective);
            out.p1Wins = r.p1WinsInit;
            out.configs = r.ex.size();
            out.run = r.witness;
            break;
        }
    }
    return out;
}

int emit_report(const Arena& a, const QueryFlags& q, const SolveOutcome& out, bool stable,
                double wallMs) {
    json rep;
    rep["query"] = query_json(q);
    rep["winner"] = out.p1Wins ? "P1" : "P2";
    if (out.compact)
        rep["witness"] = witness_json(a, *out.compact);
    else if (out.run)
        rep["witness"] = run_json(a, *out.run);
    else
        rep["witness"] = nullptr;
    rep["witnessLength"] = out.run ? json(out.run->length()) : json(nullptr);
    json stats;
    stats["configs"] = out.configs;
    stats["labels"] = out.labels;
    if (!stable) stats["wallMs"] = wallMs;
    rep["stats"] = stats;
    std::cout << rep.dump(2) << "\n";
    return out.p1Wins ? kExitWin : kExitLose;
}

void add_query_flags(CLI::App* cmd, QueryFlags& q, bool needKind = true) {
    cmd->add_option("file", q.file, "arena file (.json uses the JSON schema)")->required();
    if (needKind) cmd->add_option("--kind", q.kind, "L, LU, LW or LV")->required();
    cmd->add_option("--L", q.L, "lower bound (also the initial credit)");
    cmd->add_option("--U", q.U, "strict upper bound (LU, LV)");
    cmd->add_option("--W", q.W, "weak upper bound (LW)");
    cmd->add_option("--S", q.S, "soft upper bound (LV)");
    cmd->add_option("--V", q.V, "violation budget (LV)");
    cmd->add_option("--measure", q.measure, "count, cons or sum (LV)");
    cmd->add_option("--objective", q.objective, "reach or inf");
    cmd->add_flag("--oracle", q.oracle, "force the brute-force expansion route");
}

int cmd_trace(const Arena& a, const QueryFlags& q) {
    ConstraintSpec spec = to_spec(q);
    if (spec.objective != Objective::Reach || !a.one_player()) {
        std::cerr << "trace needs a one-player reachability query\n";
        return kExitError;
    }
    SolveOutcome out = dispatch_solve(a, q);
    if (!out.run) {
        std::cerr << "no witness: P1 does not win this query\n";
        return kExitLose;
    }
    std::cout << "index,state,level,violating\n";
    for (std::size_t i = 0; i < out.run->states.size(); ++i) {
        bool viol = spec.S && out.run->levels[i] > *spec.S;
        std::cout << i << "," << a.names[out.run->states[i]] << "," << out.run->levels[i] << ","
                  << (viol ? 1 : 0) << "\n";
    }
    return kExitWin;
}

json gen_params_from_file(const std::string& path, GenParams& p, ConstraintSpec& spec) {
    json j = json::object();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ArenaError(ArenaErrorKind::Syntax, "cannot open params file '" + path + "'");
        in >> j;
    }
    p.states = j.value("states", p.states);
    p.p2Fraction = j.value("p2", p.p2Fraction);
    p.wMin = j.value("wmin", p.wMin);
    p.wMax = j.value("wmax", p.wMax);
    p.edgeDensity = j.value("density", p.edgeDensity);
    p.targetCount = j.value("targets", p.targetCount);
    spec.L = j.value("L", spec.L);
    if (j.contains("U")) spec.U = j["U"].get<Level>();
    if (j.contains("W")) spec.W = j["W"].get<Level>();
    if (j.contains("S")) spec.S = j["S"].get<Level>();
    if (j.contains("V")) spec.V = j["V"].get<Level>();
    std::string m = j.value("measure", "count");
    spec.measure = m == "sum" ? Measure::Sum : m == "cons" ? Measure::Consecutive : Measure::Count;
    return j;
}

struct PairCheck {
    std::string name;
    // returns divergence description, empty when the routes agree
    std::function<std::string(const Arena&, const ConstraintSpec&)> check;
    bool onePlayer = false;
};

std::vector<PairCheck> crosscheck_pairs() {
    std::vector<PairCheck> pairs;
    pairs.push_back({"lwpoly:exglw",
                     [](const Arena& a, const ConstraintSpec& s) -> std::string {
                         bool poly = solve_lw_reach_1p(a, s.L, *s.W).witness.has_value();
                         ExpandedArena ex = build_lw(a, s.L, *s.W);
                         bool oracle = oracle_solve(ex, Objective::Reach).winner[ex.init] == Player::One;
                         if (poly != oracle)
                             return "poly=" + std::to_string(poly) + " oracle=" + std::to_string(oracle);
                         return "";
                     },
                     true});
    pairs.push_back({"lw2p:p2enum",
                     [](const Arena& a, const ConstraintSpec& s) -> std::string {
                         bool solver = solve_lw_2p(a, s.L, *s.W, Objective::Reach).p1WinsInit;
                         bool enumed = enumerate_p2_memoryless(a, s) == Player::One;
                         if (solver != enumed)
                             return "solver=" + std::to_string(solver) + " enum=" + std::to_string(enumed);
                         return "";
                     },
                     false});
    pairs.push_back({"lenergy:capped",
                     [](const Arena& a, const ConstraintSpec& s) -> std::string {
                         bool pm = solve_l_energy(a, s.L).winner[a.initial] == Player::One;
                         ExpandedArena ex = build_l_capped(a, s.L);
                         bool cap = oracle_solve(ex, Objective::InfiniteRun).winner[ex.init] == Player::One;
                         if (pm != cap)
                             return "measure=" + std::to_string(pm) + " capped=" + std::to_string(cap);
                         return "";
                     },
                     false});
    pairs.push_back({"e2r:oracle",
                     [](const Arena& a, const ConstraintSpec& s) -> std::string {
                         bool direct = solve_l_energy(a, s.L).winner[a.initial] == Player::One;
                         ReductionOutput red = reduce_energy_to_reach(a);
                         ExpandedArena ex = build_l_capped(red.arena, s.L);
                         bool reduced = oracle_solve(ex, Objective::Reach).winner[ex.init] == Player::One;
                         if (direct != reduced)
                             return "direct=" + std::to_string(direct) +
                                    " reduced=" + std::to_string(reduced);
                         return "";
                     },
                     false});
    pairs.push_back({"r2e:oracle",
                     [](const Arena& a, const ConstraintSpec& s) -> std::string {
                         bool direct = l_reach_oracle(a, s.L).p1WinsInit;
                         ReductionOutput red = reduce_reach_to_energy(a);
                         bool reduced =
                             solve_l_energy(red.arena, s.L).winner[red.arena.initial] == Player::One;
                         if (direct != reduced)
                             return "direct=" + std::to_string(direct) +
                                    " reduced=" + std::to_string(reduced);
                         return "";
                     },
                     false});
    pairs.push_back({"lv:runoracle",
                     [](const Arena& a, const ConstraintSpec& s) -> std::string {
                         bool solver =
                             solve_lv(a, s.L, *s.S, *s.U, *s.V, *s.measure, Objective::Reach).p1WinsInit;
                         int maxLen = static_cast<int>((*s.U - s.L + 1) * (*s.V + 2)) * a.size() + 2;
                         bool oracle = bounded_run_oracle(a, s, maxLen).has_value();
                         if (solver != oracle)
                             return "solver=" + std::to_string(solver) + " oracle=" + std::to_string(oracle);
                         return "";
                     },
                     true});
    return pairs;
}

int cmd_crosscheck(const std::string& pairName, int seeds, const std::string& paramsFile) {
    GenParams p;
    p.states = 5;
    p.edgeDensity = 0.35;
    ConstraintSpec spec;
    spec.kind = ConstraintKind::LV;
    spec.objective = Objective::Reach;
    spec.W = 4;
    spec.S = 2;
    spec.U = 5;
    spec.V = 3;
    spec.measure = Measure::Count;
    gen_params_from_file(paramsFile, p, spec);

    const PairCheck* pc = nullptr;
    auto pairs = crosscheck_pairs();
    for (const auto& cand : pairs)
        if (cand.name == pairName) pc = &cand;
    if (!pc) {
        std::cerr << "unknown pair '" << pairName << "'; known:";
        for (const auto& cand : pairs) std::cerr << " " << cand.name;
        std::cerr << "\n";
        return kExitError;
    }
    if (pc->onePlayer) p.p2Fraction = 0;

    int divergences = 0;
    for (int s = 0; s < seeds; ++s) {
        p.seed = static_cast<std::uint64_t>(s) + 1;
        Arena a = random_arena(p);
        std::string diff = pc->check(a, spec);
        if (diff.empty()) continue;
        ++divergences;
        std::string file = "enarena-repro-" + pairName + "-" + std::to_string(p.seed) + ".arena";
        std::ofstream out(file);
        out << "# crosscheck divergence: " << pairName << " seed " << p.seed << "\n";
        out << "# " << diff << "\n";
        serialize_arena(a, out);
        std::cerr << "divergence at seed " << p.seed << ": " << diff << " (dumped " << file << ")\n";
    }
    json rep;
    rep["pair"] = pairName;
    rep["seeds"] = seeds;
    rep["divergences"] = divergences;
    std::cout << rep.dump(2) << "\n";
    return divergences == 0 ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"energy-game solvers on weighted arenas"};
    app.require_subcommand(1);
    bool stable = false;
    app.add_flag("--stable", stable, "reproducible output: no wall-time statistics");

    QueryFlags solveQ;
    CLI::App* solve = app.add_subcommand("solve", "decide the winner of an energy query");
    add_query_flags(solve, solveQ);

    QueryFlags traceQ;
    CLI::App* trace = app.add_subcommand("trace", "CSV trace of a winning run");
    add_query_flags(trace, traceQ);

    struct {
        std::string file;
        Level L = 0, W = 0;
        bool expand = false;
    } wit;
    CLI::App* witness = app.add_subcommand("witness", "compact witness for one-player weak-bound reachability");
    witness->add_option("file", wit.file)->required();
    witness->add_option("--L", wit.L);
    witness->add_option("--W", wit.W)->required();
    witness->add_flag("--expand", wit.expand, "print the full run as CSV");

    struct {
        std::string file, measure = "count", objective = "reach";
        Level L = 0, S = 0, Vmax = 0;
    } mini;
    CLI::App* minimize = app.add_subcommand("minimize", "least violation budget and strict bound");
    minimize->add_option("file", mini.file)->required();
    minimize->add_option("--L", mini.L);
    minimize->add_option("--S", mini.S)->required();
    minimize->add_option("--Vmax", mini.Vmax)->required();
    minimize->add_option("--measure", mini.measure);
    minimize->add_option("--objective", mini.objective);

    struct {
        std::string file, measure = "count", objective = "reach";
        Level L = 0, S = 0, V = 0;
    } exb;
    CLI::App* exists = app.add_subcommand("exists-bound", "is there a strict bound U that wins?");
    exists->add_option("file", exb.file)->required();
    exists->add_option("--L", exb.L);
    exists->add_option("--S", exb.S)->required();
    exists->add_option("--V", exb.V)->required();
    exists->add_option("--measure", exb.measure);
    exists->add_option("--objective", exb.objective);

    struct {
        std::string file, dir;
    } red;
    CLI::App* reduce = app.add_subcommand("reduce", "energy <-> reachability reductions");
    reduce->add_option("file", red.file)->required();
    reduce->add_option("--dir", red.dir, "e2r or r2e")->required();

    QueryFlags expandQ;
    CLI::App* expandCmd = app.add_subcommand("expand", "dump the expanded configuration arena");
    add_query_flags(expandCmd, expandQ);

    struct {
        std::optional<std::uint64_t> seed;
        int states = 4, targets = 1;
        double p2 = 0, density = 0.3;
        Weight wmin = -4, wmax = 4;
        bool asJson = false;
    } gen;
    CLI::App* genCmd = app.add_subcommand("gen", "seeded random arena");
    genCmd->add_option("--seed", gen.seed);
    genCmd->add_option("--states", gen.states);
    genCmd->add_option("--p2", gen.p2);
    genCmd->add_option("--wmin", gen.wmin);
    genCmd->add_option("--wmax", gen.wmax);
    genCmd->add_option("--density", gen.density);
    genCmd->add_option("--targets", gen.targets);
    genCmd->add_flag("--json", gen.asJson);

    struct {
        std::string pair, params;
        int seeds = 100;
    } cc;
    CLI::App* cross = app.add_subcommand("crosscheck", "solver vs oracle over seeded arenas");
    cross->add_option("--pair", cc.pair)->required();
    cross->add_option("--seeds", cc.seeds);
    cross->add_option("--params", cc.params);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            Arena a = load_arena_file(solveQ.file);
            auto t0 = std::chrono::steady_clock::now();
            SolveOutcome out = dispatch_solve(a, solveQ);
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            return emit_report(a, solveQ, out, stable, ms);
        }
        if (trace->parsed()) return cmd_trace(load_arena_file(traceQ.file), traceQ);
        if (witness->parsed()) {
            Arena a = load_arena_file(wit.file);
            auto r = solve_lw_reach_1p(a, wit.L, wit.W);
            if (!r.witness) {
                std::cerr << "target not reachable\n";
                return kExitLose;
            }
            if (wit.expand) {
                Run run = expand_witness(a, wit.L, wit.W, *r.witness);
                std::cout << "index,state,level\n";
                for (std::size_t i = 0; i < run.states.size(); ++i)
                    std::cout << i << "," << a.names[run.states[i]] << "," << run.levels[i] << "\n";
            } else {
                std::cout << witness_json(a, *r.witness).dump(2) << "\n";
            }
            return kExitWin;
        }
        if (minimize->parsed()) {
            Arena a = load_arena_file(mini.file);
            QueryFlags q;
            q.kind = "LV";
            q.measure = mini.measure;
            q.objective = mini.objective;
            ConstraintSpec spec = to_spec(q);
            auto res = minimize_violations(a, mini.L, mini.S, mini.Vmax, *spec.measure, spec.objective);
            json rep;
            rep["bestV"] = res ? json(res->bestV) : json(nullptr);
            rep["bestU"] = res ? json(res->bestU) : json(nullptr);
            rep["winner"] = res ? "P1" : "P2";
            rep["witnessLength"] = res && res->witness ? json(res->witness->length()) : json(nullptr);
            std::cout << rep.dump(2) << "\n";
            return res ? kExitWin : kExitLose;
        }
        if (exists->parsed()) {
            Arena a = load_arena_file(exb.file);
            QueryFlags q;
            q.kind = "LV";
            q.measure = exb.measure;
            q.objective = exb.objective;
            ConstraintSpec spec = to_spec(q);
            auto u = bound_existence(a, exb.L, exb.S, exb.V, *spec.measure, spec.objective);
            json rep;
            rep["exists"] = u.has_value();
            rep["U"] = u ? json(*u) : json(nullptr);
            std::cout << rep.dump(2) << "\n";
            return u ? kExitWin : kExitLose;
        }
        if (reduce->parsed()) {
            Arena a = load_arena_file(red.file);
            ReductionOutput out;
            if (red.dir == "e2r")
                out = reduce_energy_to_reach(a);
            else if (red.dir == "r2e")
                out = reduce_reach_to_energy(a);
            else {
                std::cerr << "--dir must be e2r or r2e\n";
                return kExitError;
            }
            std::cout << "# scale " << out.scale << "\n";
            if (out.delta > 0) std::cout << "# delta " << out.delta << "\n";
            for (StateId q = 0; q < a.size(); ++q) {
                std::cout << "# map " << a.names[q] << " -> ";
                if (out.mapState[q] < 0)
                    std::cout << "(dropped)";
                else
                    std::cout << out.arena.names[out.mapState[q]];
                if (out.mapCopy[q] >= 0) std::cout << ", " << out.arena.names[out.mapCopy[q]];
                std::cout << "\n";
            }
            serialize_arena(out.arena, std::cout);
            return 0;
        }
        if (expandCmd->parsed()) {
            Arena a = load_arena_file(expandQ.file);
            ConstraintSpec spec = to_spec(expandQ);
            spec.validate(a);
            ExpandedArena ex = build_expansion(a, spec);
            for (int c = 0; c < ex.size(); ++c) {
                std::cout << "state " << ex.config_name(c)
                          << " owner=" << (ex.owner[c] == Player::One ? 1 : 2);
                if (c == ex.init) std::cout << " init";
                for (int t : ex.targets)
                    if (t == c) std::cout << " target";
                std::cout << "\n";
            }
            for (const ExpandedEdge& e : ex.edges)
                std::cout << "edge " << ex.config_name(e.src) << " " << e.weight << " "
                          << ex.config_name(e.dst) << "\n";
            return 0;
        }
        if (genCmd->parsed()) {
            GenParams p;
            if (gen.seed)
                p.seed = *gen.seed;
            else if (const char* env = std::getenv("ENARENA_SEED"))
                p.seed = std::strtoull(env, nullptr, 10);
            p.states = gen.states;
            p.p2Fraction = gen.p2;
            p.wMin = gen.wmin;
            p.wMax = gen.wmax;
            p.edgeDensity = gen.density;
            p.targetCount = gen.targets;
            Arena a = random_arena(p);
            if (gen.asJson)
                std::cout << arena_to_json(a).dump(2) << "\n";
            else
                serialize_arena(a, std::cout);
            return 0;
        }
        if (cross->parsed()) return cmd_crosscheck(cc.pair, cc.seeds, cc.params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
