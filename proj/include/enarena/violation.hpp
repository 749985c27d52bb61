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

#ifndef ENARENA_VIOLATION_HPP
#define ENARENA_VIOLATION_HPP

#include "enarena/game.hpp"

// Soft-upper-bound games: positions whose energy level exceeds the soft bound
// S are violations, quantified by their count, longest consecutive block, or
// total overshoot. Solving works on the counter-carrying expansion; bound
// existence and minimization search over the strict bound U and the budget V.

namespace enarena {

struct ViolationStats {
    std::int64_t count = 0;
    std::int64_t maxConsecutive = 0;
    std::int64_t sum = 0;

    std::int64_t get(Measure m) const {
        switch (m) {
            case Measure::Count: return count;
            case Measure::Consecutive: return maxConsecutive;
            case Measure::Sum: return sum;
        }
        return 0;
    }
};

/// Violation measures of a per-position level sequence against soft bound S.
inline ViolationStats violation_stats(std::span<const Level> levels, Level S) {
    ViolationStats v;
    std::int64_t streak = 0;
    for (Level l : levels) {
        if (l > S) {
            ++v.count;
            ++streak;
            v.sum = checked_add(v.sum, l - S);
            v.maxConsecutive = std::max(v.maxConsecutive, streak);
        } else {
            streak = 0;
        }
    }
    return v;
}

inline ViolationStats violation_stats(const std::vector<Level>& levels, Level S) {
    return violation_stats(std::span<const Level>(levels), S);
}

struct LvResult {
    ExpandedArena ex;
    WinningRegion region;  // over configurations
    bool p1WinsInit = false;
    std::optional<Run> witness;  // one-player reachability only
};

/// Decide the soft-upper-bound game with budget V on the selected measure.
inline LvResult solve_lv(const Arena& a, Level L, Level S, Level U, Level V, Measure measure,
                         Objective objective) {
    if (objective == Objective::Reach && a.targets.empty())
        throw ArenaError(ArenaErrorKind::Invalid, "reachability objective needs a target state");
    ExpandedArena ex = build_luv(a, L, S, U, V, measure);
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
    LvResult res{std::move(ex), std::move(region), false, std::nullopt};
    res.p1WinsInit = res.region.winner[res.ex.init] == Player::One;
    if (res.p1WinsInit && objective == Objective::Reach && a.one_player())
        res.witness = shortest_witness(res.ex);
    return res;
}

/// A strict bound that never cuts a winning strategy: while violating, the
/// level can rise by at most the largest positive weight per position, and
/// any of the three measures allows at most V consecutive violating
/// positions, so winning plays stay below S + V*w_max.
inline Level violation_bound_u(const Arena& a, Level S, Level V) {
    return checked_add(S, checked_mul(V, max_pos_weight(a)));
}

/// Least-effort existence check: P1 wins for some strict bound U iff she wins
/// at U = S + V*w_max. Returns that U, or nothing.
inline std::optional<Level> bound_existence(const Arena& a, Level L, Level S, Level V,
                                            Measure measure, Objective objective) {
    if (L > S || V < 0) throw ArenaError(ArenaErrorKind::Invalid, "need L <= S and V >= 0");
    Level U = violation_bound_u(a, S, V);
    if (solve_lv(a, L, S, U, V, measure, objective).p1WinsInit) return U;
    return std::nullopt;
}

struct MinimizeResult {
    Level bestV = 0;
    Level bestU = 0;
    std::optional<Run> witness;  // winning run for (bestV, bestU), one-player reach
};

/// Least violation budget below Vmax for which some strict bound U wins,
/// then the least such U. Both searches are binary, justified by the
/// monotonicity of winning in V (bad-set containment) and in U.
inline std::optional<MinimizeResult> minimize_violations(const Arena& a, Level L, Level S,
                                                         Level Vmax, Measure measure,
                                                         Objective objective) {
    if (L > S || Vmax < 0) throw ArenaError(ArenaErrorKind::Invalid, "need L <= S and Vmax >= 0");
    if (!bound_existence(a, L, S, Vmax, measure, objective)) return std::nullopt;

    Level lo = 0, hi = Vmax;  // smallest winning V in [0, Vmax]; Vmax known to win
    while (lo < hi) {
        Level mid = lo + (hi - lo) / 2;
        if (bound_existence(a, L, S, mid, measure, objective))
            hi = mid;
        else
            lo = mid + 1;
    }
    const Level bestV = lo;

    Level ulo = S, uhi = violation_bound_u(a, S, bestV);  // uhi known to win at bestV
    while (ulo < uhi) {
        Level mid = ulo + (uhi - ulo) / 2;
        if (solve_lv(a, L, S, mid, bestV, measure, objective).p1WinsInit)
            uhi = mid;
        else
            ulo = mid + 1;
    }

    MinimizeResult res;
    res.bestV = bestV;
    res.bestU = ulo;
    res.witness = solve_lv(a, L, S, ulo, bestV, measure, objective).witness;
    return res;
}

}  // namespace enarena

#endif
