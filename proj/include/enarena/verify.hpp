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

#ifndef ENARENA_VERIFY_HPP
#define ENARENA_VERIFY_HPP

#include <cstdlib>
#include <random>

#include "enarena/lw.hpp"
#include "enarena/violation.hpp"

// Brute-force oracles and a seeded arena generator. Every solver in the
// library has exactly one oracle pairing here; the oracles never share the
// solver's shortcuts (no pruning, no acceleration). Guards are hard errors,
// never silent truncation.

namespace enarena {

class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

struct GenParams {
    std::uint64_t seed = 1;
    int states = 4;
    double p2Fraction = 0.0;
    Weight wMin = -4;
    Weight wMax = 4;
    double edgeDensity = 0.3;
    int targetCount = 1;
};

namespace detail {

// mt19937_64 plus modulo only; std distributions vary across standard
// libraries and would break seed reproducibility.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::uint64_t below(std::uint64_t n) { return g() % n; }
    bool chance_permille(int permille) { return static_cast<int>(below(1000)) < permille; }
};

}  // namespace detail

/// Deterministic function of the seed. A repair pass gives every state at
/// least one outgoing edge, so the result always validates.
inline Arena random_arena(const GenParams& p) {
    if (p.states <= 0) throw ArenaError(ArenaErrorKind::Invalid, "need at least one state");
    if (p.wMin > p.wMax) throw ArenaError(ArenaErrorKind::Invalid, "need wMin <= wMax");
    detail::Rng rng(p.seed);
    const int n = p.states;
    const int p2 = static_cast<int>(p.p2Fraction * 1000 + 0.5);
    const int dens = static_cast<int>(p.edgeDensity * 1000 + 0.5);
    const std::uint64_t range = static_cast<std::uint64_t>(p.wMax - p.wMin + 1);

    std::vector<Player> owner(n);
    for (int q = 0; q < n; ++q)
        owner[q] = rng.chance_permille(p2) ? Player::Two : Player::One;

    std::vector<bool> target(n, false);
    int want = std::min(p.targetCount, n);
    while (want > 0) {
        int t = static_cast<int>(rng.below(n));
        if (!target[t]) {
            target[t] = true;
            --want;
        }
    }

    ArenaBuilder b;
    for (int q = 0; q < n; ++q)
        b.add_state("s" + std::to_string(q), owner[q], q == 0, target[q]);
    std::vector<int> outdeg(n, 0);
    for (int src = 0; src < n; ++src)
        for (int dst = 0; dst < n; ++dst)
            if (rng.chance_permille(dens)) {
                b.add_edge(src, p.wMin + static_cast<Weight>(rng.below(range)), dst);
                ++outdeg[src];
            }
    for (int src = 0; src < n; ++src)
        if (outdeg[src] == 0)
            b.add_edge(src, p.wMin + static_cast<Weight>(rng.below(range)),
                       static_cast<int>(rng.below(n)));
    return b.finish();
}

/// Exact winner per configuration of any expanded arena: plain attractor for
/// reachability, safety from the bad configurations for infinite runs.
inline WinningRegion oracle_solve(const ExpandedArena& ex, Objective objective) {
    GameView view = game_view(ex);
    if (objective == Objective::Reach) return attractor(view, ex.targets, Player::One);
    std::vector<int> avoid;
    for (int c = 0; c < ex.size(); ++c)
        if (ex.bad[c]) avoid.push_back(c);
    return solve_safety(view, avoid, Player::One);
}

/// Weak cap that preserves winners of lower-bound *reachability* queries:
/// minimal sufficient credits are below L + (|Q|-1)*max|w|, so clamping one
/// unit above that loses nothing. (The tighter positive-sum cap of
/// build_l_capped is only sound for infinite-run queries.)
inline Level l_reach_cap(const Arena& a, Level L) {
    Weight maxAbs = 0;
    for (const Edge& e : a.edges) maxAbs = std::max<Weight>(maxAbs, std::llabs(e.weight));
    return checked_add(L, checked_add(checked_mul(a.size() - 1, maxAbs), 1));
}

struct LReachOracle {
    ExpandedArena ex;
    WinningRegion region;
    bool p1WinsInit = false;
};

/// Oracle for lower-bound energy reachability from (initial, L).
inline LReachOracle l_reach_oracle(const Arena& a, Level L) {
    ExpandedArena ex = build_lw(a, L, l_reach_cap(a, L));
    ex.spec.kind = ConstraintKind::L;
    WinningRegion region = oracle_solve(ex, Objective::Reach);
    bool wins = region.winner[ex.init] == Player::One;
    return {std::move(ex), std::move(region), wins};
}

namespace detail {

inline Player solve_one_player(const Arena& a, const ConstraintSpec& spec) {
    switch (spec.kind) {
        case ConstraintKind::L:
            if (spec.objective == Objective::Reach)
                return l_reach_oracle(a, spec.L).p1WinsInit ? Player::One : Player::Two;
            return solve_l_energy(a, spec.L).winner[a.initial];
        case ConstraintKind::LU: {
            ExpandedArena ex = build_lu(a, spec.L, *spec.U);
            return oracle_solve(ex, spec.objective).winner[ex.init];
        }
        case ConstraintKind::LW:
            if (spec.objective == Objective::Reach)
                return solve_lw_reach_1p(a, spec.L, *spec.W).witness ? Player::One : Player::Two;
            else {
                ExpandedArena ex = build_lw(a, spec.L, *spec.W);
                return oracle_solve(ex, spec.objective).winner[ex.init];
            }
        case ConstraintKind::LV:
            return solve_lv(a, spec.L, *spec.S, *spec.U, *spec.V, *spec.measure, spec.objective)
                           .p1WinsInit
                       ? Player::One
                       : Player::Two;
    }
    return Player::Two;
}

}  // namespace detail

/// Winner at the initial state by exhausting P2's memoryless strategies: P2
/// wins iff some choice of one edge per P2 state leaves P1 losing the induced
/// one-player game. The out-degree product is guarded at 10^4.
inline Player enumerate_p2_memoryless(const Arena& a, const ConstraintSpec& spec) {
    spec.validate(a);
    std::vector<StateId> p2;
    std::uint64_t combos = 1;
    for (StateId q = 0; q < a.size(); ++q)
        if (a.owner[q] == Player::Two) {
            p2.push_back(q);
            combos *= a.out[q].size();
            if (combos > 10'000)
                throw GuardError("P2 strategy space exceeds 10^4; refusing to enumerate");
        }

    std::vector<std::size_t> pick(p2.size(), 0);
    while (true) {
        ArenaBuilder b;
        for (StateId q = 0; q < a.size(); ++q)
            b.add_state(a.names[q], Player::One, q == a.initial, a.targetMask[q]);
        for (StateId q = 0, i = 0; q < a.size(); ++q) {
            if (a.owner[q] == Player::Two) {
                const Edge& e = a.edges[a.out[q][pick[i++]]];
                b.add_edge(e.src, e.weight, e.dst);
            } else {
                for (int ei : a.out[q]) b.add_edge(a.edges[ei].src, a.edges[ei].weight, a.edges[ei].dst);
            }
        }
        if (detail::solve_one_player(b.finish(), spec) == Player::Two) return Player::Two;

        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < a.out[p2[i]].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;  // odometer wrapped
    }
    return Player::One;
}

/// Exhaustive shortest satisfying run for one-player reachability queries,
/// found by breadth-first search over (state, level, violation counter)
/// tuples computed directly from the raw semantics, then replay-validated.
inline std::optional<Run> bounded_run_oracle(const Arena& a, const ConstraintSpec& spec,
                                             int maxLen) {
    spec.validate(a);
    if (!a.one_player()) throw std::invalid_argument("bounded_run_oracle needs a one-player arena");
    if (spec.objective != Objective::Reach)
        throw std::invalid_argument("bounded_run_oracle answers reachability queries");

    struct Node {
        StateId q;
        Level level;
        Level counter;
    };
    auto key = [](const Node& n) { return std::make_tuple(n.q, n.level, n.counter); };

    const Level S = spec.S.value_or(0);
    auto step = [&](const Node& cur, const Edge& e) -> std::optional<Node> {
        Level l = checked_add(cur.level, e.weight);
        switch (spec.kind) {
            case ConstraintKind::L:
                if (l < spec.L) return std::nullopt;
                return Node{e.dst, l, 0};
            case ConstraintKind::LU:
                if (l < spec.L || l > *spec.U) return std::nullopt;
                return Node{e.dst, l, 0};
            case ConstraintKind::LW:
                if (l < spec.L) return std::nullopt;
                return Node{e.dst, std::min(*spec.W, l), 0};
            case ConstraintKind::LV: {
                if (l < spec.L || l > *spec.U) return std::nullopt;
                Level c = cur.counter;
                if (l > S) {
                    if (*spec.measure == Measure::Sum)
                        c = checked_add(c, l - S);
                    else
                        c = c + 1;
                } else if (*spec.measure == Measure::Consecutive) {
                    c = 0;
                }
                if (c > *spec.V) return std::nullopt;
                return Node{e.dst, l, c};
            }
        }
        return std::nullopt;
    };

    std::map<std::tuple<StateId, Level, Level>, std::pair<int, int>> seen;  // -> (prev id, edge)
    std::vector<Node> nodes;
    std::deque<int> frontier;
    std::vector<int> depth;

    Node start{a.initial, spec.L, 0};
    nodes.push_back(start);
    depth.push_back(0);
    seen[key(start)] = {-1, -1};
    frontier.push_back(0);
    int found = a.targetMask[a.initial] ? 0 : -1;

    while (!frontier.empty() && found < 0) {
        int id = frontier.front();
        frontier.pop_front();
        if (depth[id] >= maxLen) continue;
        Node cur = nodes[id];
        for (int ei : a.out[cur.q]) {
            auto nxt = step(cur, a.edges[ei]);
            if (!nxt || seen.count(key(*nxt))) continue;
            seen[key(*nxt)] = {id, ei};
            nodes.push_back(*nxt);
            depth.push_back(depth[id] + 1);
            int nid = static_cast<int>(nodes.size()) - 1;
            if (a.targetMask[nxt->q]) {
                found = nid;
                break;
            }
            frontier.push_back(nid);
        }
    }
    if (found < 0) return std::nullopt;

    std::vector<int> edges;
    for (int id = found;;) {
        auto [prev, e] = seen[key(nodes[id])];
        if (prev < 0) break;
        edges.push_back(e);
        id = prev;
    }
    std::reverse(edges.begin(), edges.end());
    auto run = make_run(a, spec, a.initial, spec.L, edges);
    if (!run) throw std::logic_error("bounded_run_oracle produced an infeasible run");
    if (spec.kind == ConstraintKind::LV &&
        violation_stats(run->levels, S).get(*spec.measure) > *spec.V)
        throw std::logic_error("bounded_run_oracle run exceeds the violation budget");
    return run;
}

/// Ladder family for weak-upper-bound reachability: reaching the target
/// forces climbing through W disjoint gain-one cycles that alternate between
/// two hub states joined by k-edge zero chains, so the shortest witness has
/// length exactly 3W + Wk + 2. W must be even and positive, k positive.
inline Arena lw_ladder_arena(int W, int k) {
    if (W <= 0 || W % 2 != 0 || k <= 0)
        throw ArenaError(ArenaErrorKind::Invalid, "ladder needs even W > 0 and k > 0");
    ArenaBuilder b;
    StateId q0 = b.add_state("q0", Player::One, true, false);
    StateId s = b.add_state("s", Player::One);
    StateId sp = b.add_state("sp", Player::One);
    StateId qt = b.add_state("qt", Player::One, false, true);

    b.add_edge(q0, 0, sp);
    for (int i = 0; i < W; ++i) {
        StateId home = (i % 2 == 0) ? sp : s;
        StateId ca = b.add_state("c" + std::to_string(i) + "a", Player::One);
        StateId cb = b.add_state("c" + std::to_string(i) + "b", Player::One);
        b.add_edge(home, -i, ca);
        b.add_edge(ca, W, cb);
        b.add_edge(cb, -W + i + 1, home);
    }
    StateId prev = s;
    for (int j = 1; j < k; ++j) {
        StateId mid = b.add_state("f" + std::to_string(j), Player::One);
        b.add_edge(prev, 0, mid);
        prev = mid;
    }
    b.add_edge(prev, 0, sp);
    prev = sp;
    for (int j = 1; j < k; ++j) {
        StateId mid = b.add_state("g" + std::to_string(j), Player::One);
        b.add_edge(prev, 0, mid);
        prev = mid;
    }
    b.add_edge(prev, 0, s);
    b.add_edge(sp, -W, qt);
    b.add_edge(qt, 0, qt);
    return b.finish();
}

/// Uniform random walk of up to `len` edges starting in `from`.
inline std::vector<int> random_walk(const Arena& a, std::mt19937_64& g, StateId from, int len) {
    std::vector<int> edges;
    StateId cur = from;
    for (int i = 0; i < len; ++i) {
        const auto& out = a.out[cur];
        int e = out[g() % out.size()];
        edges.push_back(e);
        cur = a.edges[e].dst;
    }
    return edges;
}

}  // namespace enarena

#endif
