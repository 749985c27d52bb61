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

#ifndef ENARENA_REPLAY_HPP
#define ENARENA_REPLAY_HPP

#include <algorithm>
#include <optional>
#include <span>

#include "enarena/arena.hpp"

// Strict replayers. These walk a sequence of edge indices under the exact
// transition semantics of each constraint and are the ground truth every
// solver output is checked against. They deliberately share no code with the
// expanded-arena constructions.

namespace enarena {

inline bool edges_form_path(const Arena& a, StateId from, std::span<const int> edges) {
    StateId cur = from;
    for (int e : edges) {
        if (e < 0 || e >= static_cast<int>(a.edges.size())) return false;
        if (a.edges[e].src != cur) return false;
        cur = a.edges[e].dst;
    }
    return true;
}

/// Levels along `edges` with only the lower bound enforced. nullopt on breach.
inline std::optional<std::vector<Level>> replay_l(const Arena& a, StateId from, Level start,
                                                  Level L, std::span<const int> edges) {
    if (!edges_form_path(a, from, edges) || start < L) return std::nullopt;
    std::vector<Level> lv{start};
    Level cur = start;
    for (int e : edges) {
        cur = checked_add(cur, a.edges[e].weight);
        if (cur < L) return std::nullopt;
        lv.push_back(cur);
    }
    return lv;
}

/// Levels under the strict interval [L;U]. nullopt on breach.
inline std::optional<std::vector<Level>> replay_lu(const Arena& a, StateId from, Level start,
                                                   Level L, Level U, std::span<const int> edges) {
    if (!edges_form_path(a, from, edges) || start < L || start > U) return std::nullopt;
    std::vector<Level> lv{start};
    Level cur = start;
    for (int e : edges) {
        cur = checked_add(cur, a.edges[e].weight);
        if (cur < L || cur > U) return std::nullopt;
        lv.push_back(cur);
    }
    return lv;
}

/// Levels under the weak upper bound: l' = min(W, l+w), still >= L.
inline std::optional<std::vector<Level>> replay_lw(const Arena& a, StateId from, Level start,
                                                   Level L, Level W, std::span<const int> edges) {
    if (!edges_form_path(a, from, edges) || start < L || start > W) return std::nullopt;
    std::vector<Level> lv{start};
    Level cur = start;
    for (int e : edges) {
        cur = std::min(W, checked_add(cur, a.edges[e].weight));
        if (cur < L) return std::nullopt;
        lv.push_back(cur);
    }
    return lv;
}

inline std::optional<std::vector<Level>> replay_levels(const Arena& a, const ConstraintSpec& spec,
                                                       StateId from, Level start,
                                                       std::span<const int> edges) {
    switch (spec.kind) {
        case ConstraintKind::L:
            return replay_l(a, from, start, spec.L, edges);
        case ConstraintKind::LU:
            return replay_lu(a, from, start, spec.L, *spec.U, edges);
        case ConstraintKind::LW:
            return replay_lw(a, from, start, spec.L, *spec.W, edges);
        case ConstraintKind::LV:
            // Energy part of an LV run is plain [L;U] feasibility; violation
            // accounting lives in violation_stats.
            return replay_lu(a, from, start, spec.L, *spec.U, edges);
    }
    return std::nullopt;
}

/// Build a Run from edges, or nullopt if the walk breaches the constraint.
inline std::optional<Run> make_run(const Arena& a, const ConstraintSpec& spec, StateId from,
                                   Level start, std::span<const int> edges) {
    auto lv = replay_levels(a, spec, from, start, edges);
    if (!lv) return std::nullopt;
    Run r;
    r.levels = std::move(*lv);
    r.edges.assign(edges.begin(), edges.end());
    r.states.push_back(from);
    for (int e : edges) r.states.push_back(a.edges[e].dst);
    return r;
}

/// True when `run` is internally consistent and feasible under `spec`
/// starting from its recorded first state and level.
inline bool run_is_valid(const Arena& a, const ConstraintSpec& spec, const Run& run) {
    if (run.states.empty() || run.levels.size() != run.states.size() ||
        run.edges.size() + 1 != run.states.size())
        return false;
    auto lv = replay_levels(a, spec, run.states.front(), run.levels.front(), run.edges);
    if (!lv || *lv != run.levels) return false;
    for (std::size_t i = 0; i + 1 < run.states.size(); ++i)
        if (a.edges[run.edges[i]].dst != run.states[i + 1]) return false;
    return true;
}

}  // namespace enarena

#endif
