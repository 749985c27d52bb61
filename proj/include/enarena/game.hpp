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

#ifndef ENARENA_GAME_HPP
#define ENARENA_GAME_HPP

#include <deque>
#include <limits>

#include "enarena/expand.hpp"

namespace enarena {

/// Node/edge view shared by plain arenas and expanded arenas so the generic
/// game solvers run on either.
struct GameView {
    std::vector<Player> owner;
    std::vector<std::vector<std::pair<int, int>>> out;  // per node: (dst, edge id)

    int size() const { return static_cast<int>(owner.size()); }
};

inline GameView game_view(const Arena& a) {
    GameView v;
    v.owner = a.owner;
    v.out.resize(a.size());
    for (int q = 0; q < a.size(); ++q)
        for (int e : a.out[q]) v.out[q].push_back({a.edges[e].dst, e});
    return v;
}

inline GameView game_view(const ExpandedArena& ex) {
    GameView v;
    v.owner = ex.owner;
    v.out.resize(ex.size());
    for (int c = 0; c < ex.size(); ++c)
        for (int e : ex.out[c]) v.out[c].push_back({ex.edges[e].dst, e});
    return v;
}

struct WinningRegion {
    std::vector<Player> winner;
    // Memoryless choice (edge id into the view's numbering) for the winning
    // player where one is defined, -1 elsewhere.
    std::vector<int> strategy;
};

/// Classical attractor: nodes from which `player` can force a visit to
/// `targets`. Linear-time backward fixed point. The attached strategy always
/// decreases the attractor rank, ties broken by lowest edge index.
inline WinningRegion attractor(const GameView& g, const std::vector<int>& targets, Player player) {
    const int n = g.size();
    std::vector<int> rank(n, -1);
    std::vector<int> pending(n, 0);
    std::vector<std::vector<std::pair<int, int>>> in(n);  // reversed edges
    for (int q = 0; q < n; ++q) {
        pending[q] = static_cast<int>(g.out[q].size());
        for (auto [dst, e] : g.out[q]) in[dst].push_back({q, e});
    }

    std::deque<int> layer;
    for (int t : targets)
        if (rank[t] < 0) {
            rank[t] = 0;
            layer.push_back(t);
        }
    int depth = 0;
    while (!layer.empty()) {
        std::deque<int> next;
        ++depth;
        for (int x : layer) {
            for (auto [p, e] : in[x]) {
                (void)e;
                if (rank[p] >= 0) continue;
                if (g.owner[p] == player) {
                    rank[p] = depth;
                    next.push_back(p);
                } else if (--pending[p] == 0) {
                    rank[p] = depth;
                    next.push_back(p);
                }
            }
        }
        layer = std::move(next);
    }

    WinningRegion r;
    r.winner.assign(n, opponent(player));
    r.strategy.assign(n, -1);
    for (int q = 0; q < n; ++q) {
        if (rank[q] < 0) continue;
        r.winner[q] = player;
        if (g.owner[q] == player && rank[q] > 0) {
            for (auto [dst, e] : g.out[q])
                if (rank[dst] >= 0 && rank[dst] < rank[q]) {
                    r.strategy[q] = e;
                    break;
                }
        }
    }
    return r;
}

/// `player` wins safety iff the opponent cannot attract the play into `avoid`.
/// The strategy picks the lowest edge that stays inside the safe region.
inline WinningRegion solve_safety(const GameView& g, const std::vector<int>& avoid, Player player) {
    // attractor() marks in-attractor nodes with the attracting player, here
    // the opponent; everything it does not reach is safe.
    WinningRegion attr = attractor(g, avoid, opponent(player));
    WinningRegion r;
    r.strategy.assign(g.size(), -1);
    r.winner.resize(g.size());
    for (int q = 0; q < g.size(); ++q)
        r.winner[q] = attr.winner[q] == opponent(player) ? opponent(player) : player;
    for (int q = 0; q < g.size(); ++q) {
        if (r.winner[q] != player || g.owner[q] != player) continue;
        for (auto [dst, e] : g.out[q])
            if (r.winner[dst] == player) {
                r.strategy[q] = e;
                break;
            }
    }
    return r;
}

namespace detail {

constexpr Level kUnreached = std::numeric_limits<Level>::min();

// Best reachable level per state over feasible paths from (src, start),
// Bellman-Ford style. Gaining more than the sum of all positive weights
// proves some positive cycle was traversed feasibly; that cycle can be
// iterated forever, so the caller may declare a win right away (reported
// here as nullopt).
inline std::optional<std::vector<Level>> l_energy_levels_1p(const Arena& a, Level L, StateId src,
                                                            Level start) {
    const Level budget = checked_add(start, positive_weight_sum(a));
    std::vector<Level> best(a.size(), kUnreached);
    best[src] = start;
    std::deque<StateId> work{src};
    std::vector<bool> queued(a.size(), false);
    queued[src] = true;
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        queued[q] = false;
        for (int ei : a.out[q]) {
            const Edge& e = a.edges[ei];
            Level l = checked_add(best[q], e.weight);
            if (l < L) continue;
            if (l > budget) return std::nullopt;
            if (l > best[e.dst]) {
                best[e.dst] = l;
                if (!queued[e.dst]) {
                    queued[e.dst] = true;
                    work.push_back(e.dst);
                }
            }
        }
    }
    return best;
}

// One-player lower-bound-only feasibility from (src, L): P1 wins iff a
// positive cycle can be pumped, or some state x admits a cycle of
// nonnegative effect whose single lap is feasible from the best level
// reachable at x (every later lap then starts at least as high).
inline bool l_energy_win_1p(const Arena& a, Level L, StateId src) {
    auto reach = l_energy_levels_1p(a, L, src, L);
    if (!reach) return true;
    for (StateId x = 0; x < a.size(); ++x) {
        if ((*reach)[x] == kUnreached) continue;
        const Level s = (*reach)[x];
        // max level back at x over feasible paths of length >= 1 from (x, s)
        std::optional<std::vector<Level>> lap;
        {
            const Level budget = checked_add(s, positive_weight_sum(a));
            std::vector<Level> best(a.size(), kUnreached);
            std::deque<StateId> work;
            std::vector<bool> queued(a.size(), false);
            bool pumped = false;
            for (int ei : a.out[x]) {
                const Edge& e = a.edges[ei];
                Level l = checked_add(s, e.weight);
                if (l < L) continue;
                if (l > best[e.dst]) best[e.dst] = l;
            }
            for (StateId q = 0; q < a.size(); ++q)
                if (best[q] != kUnreached) {
                    work.push_back(q);
                    queued[q] = true;
                }
            while (!work.empty() && !pumped) {
                StateId q = work.front();
                work.pop_front();
                queued[q] = false;
                for (int ei : a.out[q]) {
                    const Edge& e = a.edges[ei];
                    Level l = checked_add(best[q], e.weight);
                    if (l < L) continue;
                    if (l > budget) {
                        pumped = true;
                        break;
                    }
                    if (l > best[e.dst]) {
                        best[e.dst] = l;
                        if (!queued[e.dst]) {
                            queued[e.dst] = true;
                            work.push_back(e.dst);
                        }
                    }
                }
            }
            if (pumped) return true;
            lap = std::move(best);
        }
        if ((*lap)[x] != kUnreached && (*lap)[x] >= s) return true;
    }
    return false;
}

}  // namespace detail

/// Winner of the lower-bound-only energy game with initial credit L, per
/// state. Two-player arenas go through the standard progress-measure lifting
/// (minimal extra credit per state, capped at the positive-weight sum + 1);
/// P1 wins from (q, L) iff the measure at q is zero. One-player arenas
/// short-circuit to reachable-positive-cycle detection instead.
inline WinningRegion solve_l_energy(const Arena& a, Level L) {
    WinningRegion r;
    r.winner.assign(a.size(), Player::Two);
    r.strategy.assign(a.size(), -1);

    if (a.one_player()) {
        for (StateId q = 0; q < a.size(); ++q)
            if (detail::l_energy_win_1p(a, L, q)) r.winner[q] = Player::One;
        return r;
    }

    const Level cap = positive_weight_sum(a);
    const Level top = checked_add(cap, 1);
    std::vector<Level> f(a.size(), 0);
    std::vector<std::vector<StateId>> preds(a.size());
    for (const Edge& e : a.edges) preds[e.dst].push_back(e.src);

    auto lift_edge = [&](const Edge& e) -> Level {
        if (f[e.dst] >= top) return top;
        Level v = f[e.dst] - e.weight;
        if (v < 0) v = 0;
        return v > cap ? top : v;
    };
    auto eval = [&](StateId q) -> Level {
        bool first = true;
        Level v = 0;
        for (int ei : a.out[q]) {
            Level w = lift_edge(a.edges[ei]);
            if (first)
                v = w, first = false;
            else if (a.owner[q] == Player::One)
                v = std::min(v, w);
            else
                v = std::max(v, w);
        }
        return v;
    };

    std::deque<StateId> work;
    std::vector<bool> queued(a.size(), true);
    for (StateId q = 0; q < a.size(); ++q) work.push_back(q);
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        queued[q] = false;
        Level v = eval(q);
        if (v > f[q]) {
            f[q] = v;
            for (StateId p : preds[q])
                if (!queued[p]) {
                    queued[p] = true;
                    work.push_back(p);
                }
        }
    }

    for (StateId q = 0; q < a.size(); ++q) {
        if (f[q] != 0) continue;
        r.winner[q] = Player::One;
        if (a.owner[q] == Player::One) {
            for (int ei : a.out[q])
                if (lift_edge(a.edges[ei]) == 0) {
                    r.strategy[q] = ei;
                    break;
                }
        }
    }
    return r;
}

/// Breadth-first shortest run from the initial configuration to any of
/// `targets`, avoiding bad configurations. One-player expanded arenas only.
inline std::optional<Run> shortest_witness(const ExpandedArena& ex, const std::vector<int>& targets) {
    if (!ex.arena.one_player())
        throw std::invalid_argument("shortest_witness needs a one-player arena");
    std::vector<bool> isTarget(ex.size(), false);
    for (int t : targets)
        if (!ex.bad[t]) isTarget[t] = true;

    std::vector<int> parentEdge(ex.size(), -2);  // -2 unvisited, -1 root
    std::deque<int> queue;
    if (!ex.bad[ex.init]) {
        parentEdge[ex.init] = -1;
        queue.push_back(ex.init);
    }
    int hit = -1;
    if (!queue.empty() && isTarget[ex.init]) hit = ex.init;
    while (!queue.empty() && hit < 0) {
        int c = queue.front();
        queue.pop_front();
        for (int ei : ex.out[c]) {
            int d = ex.edges[ei].dst;
            if (ex.bad[d] || parentEdge[d] != -2) continue;
            parentEdge[d] = ei;
            if (isTarget[d]) {
                hit = d;
                break;
            }
            queue.push_back(d);
        }
    }
    if (hit < 0) return std::nullopt;

    std::vector<int> exEdges;
    for (int c = hit; parentEdge[c] != -1; c = ex.edges[parentEdge[c]].src)
        exEdges.push_back(parentEdge[c]);
    std::reverse(exEdges.begin(), exEdges.end());

    Run r;
    r.states.push_back(ex.configs[ex.init].state);
    r.levels.push_back(ex.configs[ex.init].level);
    for (int ei : exEdges) {
        const Config& c = ex.configs[ex.edges[ei].dst];
        r.states.push_back(c.state);
        r.levels.push_back(c.level);
        r.edges.push_back(ex.edges[ei].arenaEdge);
    }
    return r;
}

inline std::optional<Run> shortest_witness(const ExpandedArena& ex) {
    return shortest_witness(ex, ex.targets);
}

}  // namespace enarena

#endif
