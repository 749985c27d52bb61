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

#ifndef ENARENA_EXPAND_HPP
#define ENARENA_EXPAND_HPP

#include <deque>
#include <map>
#include <tuple>

#include "enarena/arena.hpp"

// Explicit configuration graphs: arena state x energy level (x violation
// counter). Only the fragment forward-reachable from the initial
// configuration is materialized. Constraint breaches route to a single error
// sink (strict/weak bounds) or to one absorbing tainted node per state
// (violation games), so breaches stay absorbing without blowing up the size.

namespace enarena {

enum class ConfigTag { Plain, Err, Bot };

struct Config {
    StateId state;   // -1 for the error sink
    Level level;     // meaningful for Plain only
    Level counter;   // meaningful for Plain configs of violation arenas only
    ConfigTag tag;
};

struct ExpandedEdge {
    int src;
    Weight weight;
    int dst;
    int arenaEdge;  // -1 for the error self-loop
};

struct ExpandedArena {
    Arena arena;  // the base arena, kept for names and owners
    ConstraintSpec spec;
    std::vector<Config> configs;  // discovery order; canonical downstream
    std::vector<Player> owner;
    std::vector<bool> bad;  // Err or Bot
    std::vector<ExpandedEdge> edges;
    std::vector<std::vector<int>> out;
    int init = -1;
    std::vector<int> targets;  // non-bad configs whose state is an arena target

    int size() const { return static_cast<int>(configs.size()); }

    std::string config_name(int c) const {
        const Config& k = configs[c];
        if (k.tag == ConfigTag::Err) return "err";
        if (k.tag == ConfigTag::Bot) return arena.names[k.state] + "@bot";
        std::string n = arena.names[k.state] + "@" + std::to_string(k.level);
        if (spec.kind == ConstraintKind::LV) n += "@" + std::to_string(k.counter);
        return n;
    }
};

namespace detail {

// Hard cap on materialized configurations; an oracle that silently truncates
// is worse than none, so refuse loudly instead.
constexpr int kMaxConfigs = 4'000'000;

class Expansion {
public:
    Expansion(const Arena& a, ConstraintSpec spec) {
        ex_.arena = a;
        ex_.spec = std::move(spec);
    }

    int intern(Config c) {
        auto key = std::make_tuple(static_cast<int>(c.tag), c.state, c.level, c.counter);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        if (ex_.size() >= kMaxConfigs)
            throw ArenaError(ArenaErrorKind::Invalid, "expanded arena exceeds the size guard");
        int id = ex_.size();
        index_.emplace(key, id);
        ex_.configs.push_back(c);
        ex_.owner.push_back(c.tag == ConfigTag::Err ? Player::One : ex_.arena.owner[c.state]);
        ex_.bad.push_back(c.tag != ConfigTag::Plain);
        ex_.out.emplace_back();
        queue_.push_back(id);
        return id;
    }

    void add_edge(int src, Weight w, int dst, int arenaEdge) {
        ex_.out[src].push_back(static_cast<int>(ex_.edges.size()));
        ex_.edges.push_back({src, w, dst, arenaEdge});
    }

    // Forward exploration; `step` maps (config, arena edge) to the unique
    // successor configuration.
    template <typename Step>
    ExpandedArena run(Config init, Step step) {
        ex_.init = intern(init);
        while (!queue_.empty()) {
            int c = queue_.front();
            queue_.pop_front();
            const Config cfg = ex_.configs[c];
            if (cfg.tag == ConfigTag::Err) {
                int self = intern(cfg);
                add_edge(c, 0, self, -1);  // (q_err, 0, q_err)
                continue;
            }
            for (int e : ex_.arena.out[cfg.state]) {
                Config nxt = step(cfg, ex_.arena.edges[e]);
                add_edge(c, ex_.arena.edges[e].weight, intern(nxt), e);
            }
        }
        for (int c = 0; c < ex_.size(); ++c)
            if (!ex_.bad[c] && ex_.arena.targetMask[ex_.configs[c].state]) ex_.targets.push_back(c);
        return std::move(ex_);
    }

private:
    ExpandedArena ex_;
    std::map<std::tuple<int, StateId, Level, Level>, int> index_;
    std::deque<int> queue_;
};

inline Config err_config() { return {-1, 0, 0, ConfigTag::Err}; }
inline Config bot_config(StateId q) { return {q, 0, 0, ConfigTag::Bot}; }

}  // namespace detail

/// Reachable fragment of the strict-interval arena: l' = l + w must stay in
/// [L;U], anything else falls into the error sink.
inline ExpandedArena build_lu(const Arena& a, Level L, Level U) {
    if (L > U) throw ArenaError(ArenaErrorKind::Invalid, "need L <= U");
    ConstraintSpec spec{ConstraintKind::LU, L, U, {}, {}, {}, {}, Objective::Reach};
    detail::Expansion x(a, spec);
    return x.run({a.initial, L, 0, ConfigTag::Plain}, [&](const Config& c, const Edge& e) {
        Level l = checked_add(c.level, e.weight);
        if (l < L || l > U) return detail::err_config();
        return Config{e.dst, l, 0, ConfigTag::Plain};
    });
}

/// Weak-upper-bound arena: l' = min(W, l + w), still >= L.
inline ExpandedArena build_lw(const Arena& a, Level L, Level W) {
    if (L > W) throw ArenaError(ArenaErrorKind::Invalid, "need L <= W");
    ConstraintSpec spec{ConstraintKind::LW, L, {}, W, {}, {}, {}, Objective::Reach};
    detail::Expansion x(a, spec);
    return x.run({a.initial, L, 0, ConfigTag::Plain}, [&](const Config& c, const Edge& e) {
        Level l = checked_add(c.level, e.weight);
        if (l < L) return detail::err_config();
        return Config{e.dst, std::min(W, l), 0, ConfigTag::Plain};
    });
}

/// Finite stand-in for the infinite lower-bound-only arena, for oracle use:
/// weak clamp at L + (sum of positive weights) + 1. Reaching the cap already
/// proves a usable positive cycle, so clamping there keeps winners intact.
inline ExpandedArena build_l_capped(const Arena& a, Level L) {
    Level cap = checked_add(checked_add(L, positive_weight_sum(a)), 1);
    ExpandedArena ex = build_lw(a, L, cap);
    ex.spec.kind = ConstraintKind::L;
    ex.spec.W = cap;
    return ex;
}

/// Soft-upper-bound arena. Configurations carry the single counter selected
/// by `measure`; positions with level in (S;U] are violations. A counter past
/// V, or a level outside [L;U], taints the run into an absorbing per-state
/// sink.
inline ExpandedArena build_luv(const Arena& a, Level L, Level S, Level U, Level V,
                               Measure measure) {
    if (!(L <= S && S <= U)) throw ArenaError(ArenaErrorKind::Invalid, "need L <= S <= U");
    if (V < 0) throw ArenaError(ArenaErrorKind::Invalid, "need V >= 0");
    ConstraintSpec spec{ConstraintKind::LV, L, U, {}, S, V, measure, Objective::Reach};
    detail::Expansion x(a, spec);
    return x.run({a.initial, L, 0, ConfigTag::Plain}, [&](const Config& c, const Edge& e) {
        if (c.tag == ConfigTag::Bot) return detail::bot_config(e.dst);
        Level l = checked_add(c.level, e.weight);
        if (l < L || l > U) return detail::bot_config(e.dst);
        Level n = c.counter;
        if (l > S) {
            switch (measure) {
                case Measure::Count: n = n + 1; break;
                case Measure::Consecutive: n = n + 1; break;
                case Measure::Sum: n = checked_add(n, l - S); break;
            }
        } else if (measure == Measure::Consecutive) {
            n = 0;
        }
        if (n > V) return detail::bot_config(e.dst);
        return Config{e.dst, l, n, ConfigTag::Plain};
    });
}

/// Dispatch on a full constraint spec (LW uses W, LV uses S/U/V/measure, ...).
inline ExpandedArena build_expansion(const Arena& a, const ConstraintSpec& spec) {
    spec.validate(a);
    switch (spec.kind) {
        case ConstraintKind::L: return build_l_capped(a, spec.L);
        case ConstraintKind::LU: return build_lu(a, spec.L, *spec.U);
        case ConstraintKind::LW: return build_lw(a, spec.L, *spec.W);
        case ConstraintKind::LV: return build_luv(a, spec.L, *spec.S, *spec.U, *spec.V, *spec.measure);
    }
    throw ArenaError(ArenaErrorKind::Invalid, "unreachable");
}

}  // namespace enarena

#endif
