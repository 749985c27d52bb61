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

#ifndef ENARENA_REDUCE_HPP
#define ENARENA_REDUCE_HPP

#include "enarena/game.hpp"

// Winner-preserving translations between lower-bound energy games and
// lower-bound energy reachability games. The usual rational nudge epsilon is
// realized as the integer 1 after scaling every weight by |Q|+1: a cycle has
// at most |Q| edges, so the accumulated nudges can never flip the sign of a
// scaled cycle.

namespace enarena {

struct ReductionOutput {
    Arena arena;
    Level scale;                     // |Q|+1
    Level delta;                     // energy->reach only: cost of the target hop
    std::vector<StateId> mapState;   // original state -> its image (-1 if dropped)
    std::vector<StateId> mapCopy;    // original state -> its P1 copy (-1 if none)
};

namespace detail {

inline std::string fresh_name(const Arena& a, std::string base) {
    while (a.find(base) >= 0) base += "_";
    return base;
}

}  // namespace detail

/// Energy -> energy-reachability. Every weight w becomes scale*w + 1; after
/// each original move the play passes through a P1-owned copy state that can
/// either continue for free or pay delta (more than every positive weight
/// combined) to enter the fresh target. P1 wins the energy game on the input
/// iff she wins the reachability game on the output, from the same initial
/// credit.
inline ReductionOutput reduce_energy_to_reach(const Arena& a) {
    const Level scale = a.size() + 1;
    ArenaBuilder b;
    ReductionOutput out;
    out.scale = scale;
    out.mapState.resize(a.size());
    out.mapCopy.resize(a.size());

    Level delta = 1;
    for (const Edge& e : a.edges) {
        Level w = checked_add(checked_mul(scale, e.weight), 1);
        if (w > 0) delta = checked_add(delta, w);
    }
    out.delta = delta;

    for (StateId q = 0; q < a.size(); ++q)
        out.mapState[q] = b.add_state(a.names[q], a.owner[q], q == a.initial, false);
    for (StateId q = 0; q < a.size(); ++q)
        out.mapCopy[q] = b.add_state(detail::fresh_name(a, a.names[q] + "_c"), Player::One);
    StateId target = b.add_state(detail::fresh_name(a, "goal"), Player::One, false, true);

    for (const Edge& e : a.edges)
        b.add_edge(out.mapState[e.src], checked_add(checked_mul(scale, e.weight), 1),
                   out.mapCopy[e.dst]);
    for (StateId q = 0; q < a.size(); ++q) {
        b.add_edge(out.mapCopy[q], 0, out.mapState[q]);
        b.add_edge(out.mapCopy[q], -delta, target);
    }
    b.add_edge(target, 0, target);

    out.arena = b.finish();
    return out;
}

/// Energy-reachability -> energy. Restrict to the states from which P1 can
/// reach a target with no quantitative constraint, keep only a zero self-loop
/// on targets, turn every other weight w into scale*w - 1, and feed the old
/// initial state from a fresh one with weight scale (one whole unit, in the
/// scaled system). When the initial state cannot even qualitatively reach a
/// target, the output is a two-state arena that drains into a losing sink.
inline ReductionOutput reduce_reach_to_energy(const Arena& a) {
    if (a.targets.empty()) throw ArenaError(ArenaErrorKind::Invalid, "no target state");
    const Level scale = a.size() + 1;
    ReductionOutput out;
    out.scale = scale;
    out.delta = 0;
    out.mapState.assign(a.size(), -1);
    out.mapCopy.assign(a.size(), -1);

    WinningRegion attr = attractor(game_view(a), a.targets, Player::One);
    ArenaBuilder b;
    StateId init = b.add_state(detail::fresh_name(a, "start"), Player::One, true, false);

    if (attr.winner[a.initial] != Player::One) {
        StateId sink = b.add_state(detail::fresh_name(a, "sink"), Player::One);
        b.add_edge(init, scale, sink);
        b.add_edge(sink, -1, sink);
        out.arena = b.finish();
        return out;
    }

    for (StateId q = 0; q < a.size(); ++q)
        if (attr.winner[q] == Player::One)
            out.mapState[q] = b.add_state(a.names[q], a.owner[q]);
    b.add_edge(init, scale, out.mapState[a.initial]);
    for (StateId q = 0; q < a.size(); ++q) {
        if (out.mapState[q] < 0) continue;
        if (a.targetMask[q]) {
            b.add_edge(out.mapState[q], 0, out.mapState[q]);
            continue;
        }
        for (int ei : a.out[q]) {
            const Edge& e = a.edges[ei];
            if (out.mapState[e.dst] < 0) continue;  // P1 edges leaving the attractor
            b.add_edge(out.mapState[q], checked_add(checked_mul(scale, e.weight), -1),
                       out.mapState[e.dst]);
        }
    }
    out.arena = b.finish();
    return out;
}

}  // namespace enarena

#endif
