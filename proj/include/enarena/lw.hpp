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

#ifndef ENARENA_LW_HPP
#define ENARENA_LW_HPP

#include <variant>

#include "enarena/game.hpp"
#include "enarena/replay.hpp"

// Polynomial-time one-player reachability under a weak upper bound.
//
// The key device is the cycle label (M, m): along a prefix of a cycle that is
// iterable from the lowest allowed energy L, M is the maximal level observed
// so far and m the gap between M and the current level. Iterating the full
// cycle W-L times stabilizes the level at W-m, independent of the entry
// level, so one synthetic "set to W-m_q" self-loop per state summarizes all
// useful pumping and a shallow maximal-energy sweep decides reachability.

namespace enarena {

struct CycleLabel {
    Level peak;  // M: maximal level observed, starting from L
    Level gap;   // m: M minus the current level

    Level current(Level /*unused*/ = 0) const { return peak - gap; }
    bool operator==(const CycleLabel&) const = default;
};

/// (M,m) <= (M',m') iff M-m <= M'-m' and m' <= m: the second label ends at
/// least as high now and loses at least as little when iterated.
inline bool label_preceq(const CycleLabel& a, const CycleLabel& b) {
    return a.peak - a.gap <= b.peak - b.gap && b.gap <= a.gap;
}

/// Advance a label over one edge of weight w, or nothing when the level
/// would drop below L. A weight above the gap sets a fresh maximum (clamped
/// at W); otherwise the maximum stands and the gap absorbs the weight.
inline std::optional<CycleLabel> label_step(const CycleLabel& lab, Weight w, Level L, Level W) {
    if (w > lab.gap) return CycleLabel{std::min(W, lab.peak - lab.gap + w), 0};
    if (w >= lab.gap + L - lab.peak) return CycleLabel{lab.peak, lab.gap - w};
    return std::nullopt;
}

struct DagLabel {
    CycleLabel label;
    StateId prevState;  // -1 at the root
    int prevIndex;
    int viaEdge;
};

/// Unwinding of the arena from `root` to depth |Q|, each node [q,d] holding
/// the maximal labels (w.r.t. label_preceq) of universal-cycle prefixes of
/// length d ending in q.
struct LabelDag {
    Level L, W;
    StateId root;
    std::vector<std::vector<std::vector<DagLabel>>> at;  // at[d][q]

    /// Edges of the prefix run realizing at[d][q][idx].
    std::vector<int> path(int d, StateId q, int idx) const {
        std::vector<int> edges;
        while (d > 0) {
            const DagLabel& l = at[d][q][idx];
            edges.push_back(l.viaEdge);
            q = l.prevState;
            idx = l.prevIndex;
            --d;
        }
        std::reverse(edges.begin(), edges.end());
        return edges;
    }

    std::size_t total_labels() const {
        std::size_t n = 0;
        for (const auto& depth : at)
            for (const auto& node : depth) n += node.size();
        return n;
    }
};

inline LabelDag label_dag(const Arena& a, Level L, Level W, StateId root) {
    if (!a.one_player()) throw std::invalid_argument("label_dag needs a one-player arena");
    if (L > W) throw ArenaError(ArenaErrorKind::Invalid, "need L <= W");
    const int n = a.size();
    LabelDag dag{L, W, root, {}};
    dag.at.assign(n + 1, std::vector<std::vector<DagLabel>>(n));
    dag.at[0][root].push_back({CycleLabel{L, 0}, -1, -1, -1});

    auto insert = [&](int d, StateId q, const DagLabel& cand) {
        auto& node = dag.at[d][q];
        for (const DagLabel& have : node)
            if (label_preceq(cand.label, have.label)) return;  // dominated (or equal): keep first
        std::erase_if(node, [&](const DagLabel& have) { return label_preceq(have.label, cand.label); });
        node.push_back(cand);
    };

    for (int d = 0; d < n; ++d) {
        for (StateId q = 0; q < n; ++q) {
            const auto& node = dag.at[d][q];
            for (int idx = 0; idx < static_cast<int>(node.size()); ++idx) {
                for (int ei : a.out[q]) {
                    auto stepped = label_step(node[idx].label, a.edges[ei].weight, L, W);
                    if (stepped) insert(d + 1, a.edges[ei].dst, {*stepped, q, idx, ei});
                }
            }
        }
        for (StateId q = 0; q < n; ++q)
            if (dag.at[d + 1][q].size() > static_cast<std::size_t>((d + 1) * n))
                throw std::logic_error("label bound exceeded at depth " + std::to_string(d + 1));
    }
    return dag;
}

struct UniversalCycle {
    Level gap;               // m_q; iterating settles the level at W - m_q
    std::vector<int> edges;  // the realizing cycle, length <= |Q|
};

/// Level after `reps` iterations of a cycle that is feasible from every
/// level >= L, starting at `from`. Laps that cannot touch W add a constant
/// gain and are skipped analytically; a repeated level is a fixpoint. This
/// keeps the cost independent of W for the usual climb-to-the-bound case.
inline Level accelerated_cycle_level(const Arena& a, const std::vector<int>& cycle, Level from,
                                     Level L, Level W, Level reps) {
    Level gain = 0, maxPrefix = 0, cum = 0;
    for (int e : cycle) {
        cum = checked_add(cum, a.edges[e].weight);
        maxPrefix = std::max(maxPrefix, cum);
        gain = cum;
    }
    Level cur = from;
    while (reps > 0) {
        if (gain > 0 && checked_add(cur, maxPrefix) < W) {
            Level k = std::min<Level>(reps, 1 + (W - 1 - maxPrefix - cur) / gain);
            cur = checked_add(cur, checked_mul(k, gain));
            reps -= k;
            continue;
        }
        Level next = cur;
        for (int e : cycle) {
            next = std::min(W, checked_add(next, a.edges[e].weight));
            if (next < L) throw std::logic_error("cycle iteration left the feasible band");
        }
        if (next == cur) break;
        cur = next;
        --reps;
    }
    return cur;
}

struct UniversalCycleTable {
    Level L, W;
    std::vector<std::optional<UniversalCycle>> at;  // per state
    std::size_t labelsStored = 0;                   // across all per-root DAGs
};

/// For every state q, the smallest gap m_q over positive universal cycles on
/// q found in the depth-|Q| label DAG rooted at q (absent when q has none).
inline UniversalCycleTable universal_cycle_table(const Arena& a, Level L, Level W) {
    UniversalCycleTable table{L, W, std::vector<std::optional<UniversalCycle>>(a.size())};
    for (StateId q = 0; q < a.size(); ++q) {
        LabelDag dag = label_dag(a, L, W, q);
        table.labelsStored += dag.total_labels();
        for (int d = 1; d <= a.size(); ++d) {
            const auto& node = dag.at[d][q];
            for (int idx = 0; idx < static_cast<int>(node.size()); ++idx) {
                const CycleLabel& lab = node[idx].label;
                // positive universal cycle, and a set level W-m above L
                if (lab.peak <= L + lab.gap || L + lab.gap >= W) continue;
                if (!table.at[q] || lab.gap < table.at[q]->gap)
                    table.at[q] = UniversalCycle{lab.gap, dag.path(d, q, idx)};
            }
        }
    }
    return table;
}

/// The arena plus one synthetic self-loop per state with a known positive
/// universal cycle; taking it sets the energy to W - m_q from any level >= L.
struct AugmentedArena {
    Arena arena;
    Level L, W;
    std::vector<std::optional<UniversalCycle>> jump;  // per state

    std::optional<Level> set_level(StateId q) const {
        if (!jump[q]) return std::nullopt;
        return W - jump[q]->gap;
    }
};

inline AugmentedArena augment_with_set_edges(const Arena& a, const UniversalCycleTable& table,
                                             Level W) {
    return AugmentedArena{a, table.L, W, table.at};
}

/// Compact witness: plain edge segments interleaved with set-jumps, each jump
/// expanding to its stored cycle iterated W-L times.
struct LwWitness {
    struct Path {
        std::vector<int> edges;
    };
    struct Jump {
        StateId state;
        Level level;  // W - m_q
        std::vector<int> cycle;
        Level reps;  // W - L
    };
    using Segment = std::variant<Path, Jump>;

    StateId from = -1;
    Level startLevel = 0;
    std::vector<Segment> segments;

    std::size_t expanded_length() const {
        std::size_t len = 0;
        for (const Segment& s : segments) {
            if (const auto* p = std::get_if<Path>(&s))
                len += p->edges.size();
            else
                len += std::get<Jump>(s).cycle.size() * static_cast<std::size_t>(std::get<Jump>(s).reps);
        }
        return len;
    }
};

/// Replay a compact witness into a concrete run under strict LW semantics.
inline Run expand_witness(const Arena& a, Level L, Level W, const LwWitness& wit) {
    std::vector<int> edges;
    for (const LwWitness::Segment& s : wit.segments) {
        if (const auto* p = std::get_if<LwWitness::Path>(&s)) {
            edges.insert(edges.end(), p->edges.begin(), p->edges.end());
        } else {
            const auto& j = std::get<LwWitness::Jump>(s);
            for (Level r = 0; r < j.reps; ++r)
                edges.insert(edges.end(), j.cycle.begin(), j.cycle.end());
        }
    }
    ConstraintSpec spec{ConstraintKind::LW, L, {}, W, {}, {}, {}, Objective::Reach};
    auto run = make_run(a, spec, wit.from, wit.startLevel, edges);
    if (!run) throw std::logic_error("witness does not replay");
    return *run;
}

struct LwReach1pResult {
    std::optional<LwWitness> witness;                // present iff a target is reachable
    std::vector<std::optional<Level>> maxLevel;      // per state, within the depth bound
    std::size_t labelsStored = 0;                    // label DAG size, for reporting
};

/// One-player LW-reachability from (initial, L), decided by the maximal
/// energy level reachable within (|Q|+1)^2 steps of the set-edge-augmented
/// arena.
inline LwReach1pResult solve_lw_reach_1p(const Arena& a, Level L, Level W) {
    if (!a.one_player()) throw std::invalid_argument("solve_lw_reach_1p needs a one-player arena");
    if (a.targets.empty()) throw std::invalid_argument("solve_lw_reach_1p needs a target");
    if (L > W) throw ArenaError(ArenaErrorKind::Invalid, "need L <= W");

    UniversalCycleTable table = universal_cycle_table(a, L, W);
    AugmentedArena aug = augment_with_set_edges(a, table, W);

    const int n = a.size();
    const int maxDepth = (n + 1) * (n + 1);
    constexpr Level kNone = std::numeric_limits<Level>::min();
    struct Parent {
        int kind;  // 0 root, 1 edge, 2 jump
        int edge;
        StateId prev;
    };
    std::vector<std::vector<Level>> best(maxDepth + 1, std::vector<Level>(n, kNone));
    std::vector<std::vector<Parent>> parent(maxDepth + 1, std::vector<Parent>(n));
    best[0][a.initial] = L;
    parent[0][a.initial] = {0, -1, -1};

    int hitDepth = -1;
    StateId hitState = -1;
    if (a.targetMask[a.initial]) {
        hitDepth = 0;
        hitState = a.initial;
    }
    for (int d = 0; d < maxDepth; ++d) {
        for (StateId q = 0; q < n; ++q) {
            if (best[d][q] == kNone) continue;
            for (int ei : a.out[q]) {
                Level l = std::min(W, checked_add(best[d][q], a.edges[ei].weight));
                if (l < L) continue;
                StateId dst = a.edges[ei].dst;
                if (l > best[d + 1][dst]) {
                    best[d + 1][dst] = l;
                    parent[d + 1][dst] = {1, ei, q};
                }
            }
            if (auto set = aug.set_level(q); set && *set > best[d + 1][q]) {
                best[d + 1][q] = *set;
                parent[d + 1][q] = {2, -1, q};
            }
        }
        if (hitDepth < 0)
            for (StateId q = 0; q < n; ++q)
                if (a.targetMask[q] && best[d + 1][q] != kNone) {
                    hitDepth = d + 1;
                    hitState = q;
                    break;
                }
    }

    LwReach1pResult res;
    res.maxLevel.assign(n, std::nullopt);
    for (int d = 0; d <= maxDepth; ++d)
        for (StateId q = 0; q < n; ++q)
            if (best[d][q] != kNone && (!res.maxLevel[q] || best[d][q] > *res.maxLevel[q]))
                res.maxLevel[q] = best[d][q];
    res.labelsStored = table.labelsStored;

    if (hitDepth < 0) return res;

    struct Move {
        bool isJump;
        int edge;  // arena edge for plain moves
    };
    std::vector<Move> moves;
    for (int d = hitDepth; d > 0;) {
        Parent p = parent[d][hitState];
        moves.push_back({p.kind == 2, p.edge});
        hitState = p.prev;
        --d;
    }
    std::reverse(moves.begin(), moves.end());

    // Exact (state, level) positions of the fully expanded run, jump segments
    // replayed from the actual entry level.
    auto simulate = [&](const std::vector<Move>& ms) {
        std::vector<std::pair<StateId, Level>> pos{{a.initial, L}};
        for (const Move& m : ms) {
            auto [q, l] = pos.back();
            if (m.isJump) {
                const UniversalCycle& c = *table.at[q];
                pos.push_back({q, accelerated_cycle_level(a, c.edges, l, L, W, W - L)});
            } else {
                pos.push_back({a.edges[m.edge].dst,
                               std::min(W, checked_add(l, a.edges[m.edge].weight))});
            }
        }
        return pos;
    };

    // Splice out revisits that do not improve the level: the suffix replays
    // from the earlier, at-least-as-high visit.
    bool spliced = true;
    while (spliced) {
        spliced = false;
        auto pos = simulate(moves);
        for (std::size_t i = 0; i < pos.size() && !spliced; ++i)
            for (std::size_t j = pos.size() - 1; j > i; --j)
                if (pos[j].first == pos[i].first && pos[j].second <= pos[i].second) {
                    moves.erase(moves.begin() + i, moves.begin() + j);
                    spliced = true;
                    break;
                }
    }

    LwWitness wit;
    wit.from = a.initial;
    wit.startLevel = L;
    LwWitness::Path cur;
    StateId at = a.initial;
    for (const Move& m : moves) {
        if (!m.isJump) {
            cur.edges.push_back(m.edge);
            at = a.edges[m.edge].dst;
        } else {
            if (!cur.edges.empty()) {
                wit.segments.push_back(cur);
                cur = {};
            }
            const UniversalCycle& c = *table.at[at];
            wit.segments.push_back(LwWitness::Jump{at, W - c.gap, c.edges, W - L});
        }
    }
    if (!cur.edges.empty()) wit.segments.push_back(cur);
    res.witness = std::move(wit);
    return res;
}

struct LwGameResult {
    ExpandedArena ex;
    WinningRegion region;  // over configurations of ex
    bool p1WinsInit;
};

/// Two-player LW-energy games, solved exactly on the expanded arena:
/// reachability by attractor to the target configurations, infinite runs by
/// safety from the error sink.
inline LwGameResult solve_lw_2p(const Arena& a, Level L, Level W, Objective objective) {
    ExpandedArena ex = build_lw(a, L, W);
    GameView view = game_view(ex);
    WinningRegion region;
    if (objective == Objective::Reach) {
        region = attractor(view, ex.targets, Player::One);
    } else {
        std::vector<int> avoid;
        for (int c = 0; c < ex.size(); ++c)
            if (ex.bad[c]) avoid.push_back(c);
        region = solve_safety(view, avoid, Player::One);
    }
    bool wins = region.winner[ex.init] == Player::One;
    return {std::move(ex), std::move(region), wins};
}

}  // namespace enarena

#endif
