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

#ifndef ENARENA_ARENA_HPP
#define ENARENA_ARENA_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace enarena {

using StateId = int;
using Weight = std::int64_t;
using Level = std::int64_t;

enum class Player { One, Two };

inline Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }

struct Edge {
    StateId src;
    Weight weight;
    StateId dst;
};

class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline Level checked_add(Level a, Level b) {
    Level r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Level checked_mul(Level a, Level b) {
    Level r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

enum class ArenaErrorKind {
    Syntax,
    DuplicateState,
    UnknownState,
    NoInitialState,
    MissingOutgoingEdge,
    Invalid,
};

class ArenaError : public std::runtime_error {
public:
    ArenaError(ArenaErrorKind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    ArenaErrorKind kind;
};

/// Finite two-player arena with integer edge weights.
///
/// States are indexed in declaration order; that order is the canonical
/// iteration order for every algorithm downstream, so identical input text
/// always produces identical results.
struct Arena {
    std::vector<std::string> names;
    std::vector<Player> owner;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> out;  // per state, edge indices in declaration order
    StateId initial = -1;
    std::vector<bool> targetMask;
    std::vector<StateId> targets;  // ascending

    int size() const { return static_cast<int>(names.size()); }

    StateId find(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (names[i] == name) return i;
        return -1;
    }

    bool is_target(StateId q) const { return targetMask[q]; }

    bool one_player() const {
        for (Player p : owner)
            if (p == Player::Two) return false;
        return true;
    }
};

class ArenaBuilder {
public:
    StateId add_state(const std::string& name, Player owner, bool init = false, bool target = false) {
        if (index_.count(name))
            throw ArenaError(ArenaErrorKind::DuplicateState, "duplicate state '" + name + "'");
        StateId id = a_.size();
        index_[name] = id;
        a_.names.push_back(name);
        a_.owner.push_back(owner);
        a_.out.emplace_back();
        a_.targetMask.push_back(target);
        if (target) a_.targets.push_back(id);
        if (init) {
            if (a_.initial >= 0)
                throw ArenaError(ArenaErrorKind::Syntax, "more than one initial state");
            a_.initial = id;
        }
        return id;
    }

    void add_edge(StateId src, Weight w, StateId dst) {
        a_.out[src].push_back(static_cast<int>(a_.edges.size()));
        a_.edges.push_back({src, w, dst});
    }

    void add_edge(const std::string& src, Weight w, const std::string& dst) {
        add_edge(resolve(src), w, resolve(dst));
    }

    Arena finish() {
        if (a_.initial < 0)
            throw ArenaError(ArenaErrorKind::NoInitialState, "no state is marked init");
        for (int q = 0; q < a_.size(); ++q)
            if (a_.out[q].empty())
                throw ArenaError(ArenaErrorKind::MissingOutgoingEdge,
                                 "state '" + a_.names[q] + "' has no outgoing edge");
        return std::move(a_);
    }

private:
    StateId resolve(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw ArenaError(ArenaErrorKind::UnknownState, "unknown state '" + name + "'");
        return it->second;
    }

    Arena a_;
    std::unordered_map<std::string, StateId> index_;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

inline Weight parse_weight(const std::string& tok, int lineNo) {
    std::size_t pos = 0;
    Weight w = 0;
    try {
        w = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size())
        throw ArenaError(ArenaErrorKind::Syntax,
                         "line " + std::to_string(lineNo) + ": bad weight '" + tok + "'");
    return w;
}

}  // namespace detail

/// Parse the line-oriented arena text format:
///   state <name> owner=<1|2> [init] [target]
///   edge <src> <weight> <dst>
/// `#` starts a comment. Errors carry the offending line number.
inline Arena parse_arena(std::istream& in) {
    struct EdgeLine {
        std::string src, dst;
        Weight w;
        int lineNo;
    };
    ArenaBuilder b;
    std::vector<EdgeLine> edgeLines;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto toks = detail::tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "state") {
            if (toks.size() < 3)
                throw ArenaError(ArenaErrorKind::Syntax,
                                 "line " + std::to_string(lineNo) + ": state needs a name and owner");
            Player owner;
            if (toks[2] == "owner=1")
                owner = Player::One;
            else if (toks[2] == "owner=2")
                owner = Player::Two;
            else
                throw ArenaError(ArenaErrorKind::Syntax,
                                 "line " + std::to_string(lineNo) + ": expected owner=1 or owner=2");
            bool init = false, target = false;
            for (std::size_t i = 3; i < toks.size(); ++i) {
                if (toks[i] == "init")
                    init = true;
                else if (toks[i] == "target")
                    target = true;
                else
                    throw ArenaError(ArenaErrorKind::Syntax, "line " + std::to_string(lineNo) +
                                                                 ": unknown marker '" + toks[i] + "'");
            }
            b.add_state(toks[1], owner, init, target);
        } else if (toks[0] == "edge") {
            if (toks.size() != 4)
                throw ArenaError(ArenaErrorKind::Syntax,
                                 "line " + std::to_string(lineNo) + ": edge needs <src> <weight> <dst>");
            edgeLines.push_back({toks[1], toks[3], detail::parse_weight(toks[2], lineNo), lineNo});
        } else {
            throw ArenaError(ArenaErrorKind::Syntax,
                             "line " + std::to_string(lineNo) + ": unknown directive '" + toks[0] + "'");
        }
    }
    for (const auto& e : edgeLines) {
        try {
            b.add_edge(e.src, e.w, e.dst);
        } catch (ArenaError& err) {
            throw ArenaError(err.kind, "line " + std::to_string(e.lineNo) + ": " + err.what());
        }
    }
    return b.finish();
}

inline Arena parse_arena(const std::string& text) {
    std::istringstream in(text);
    return parse_arena(in);
}

inline void serialize_arena(const Arena& a, std::ostream& out) {
    for (int q = 0; q < a.size(); ++q) {
        out << "state " << a.names[q] << " owner=" << (a.owner[q] == Player::One ? 1 : 2);
        if (q == a.initial) out << " init";
        if (a.targetMask[q]) out << " target";
        out << "\n";
    }
    for (const Edge& e : a.edges)
        out << "edge " << a.names[e.src] << " " << e.weight << " " << a.names[e.dst] << "\n";
}

inline std::string serialize_arena(const Arena& a) {
    std::ostringstream out;
    serialize_arena(a, out);
    return out.str();
}

inline bool same_arena(const Arena& a, const Arena& b) {
    if (a.names != b.names || a.owner != b.owner || a.initial != b.initial ||
        a.targetMask != b.targetMask || a.edges.size() != b.edges.size())
        return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const Edge &x = a.edges[i], &y = b.edges[i];
        if (x.src != y.src || x.weight != y.weight || x.dst != y.dst) return false;
    }
    return true;
}

/// Largest positive edge weight, 0 when every weight is <= 0.
inline Weight max_pos_weight(const Arena& a) {
    Weight m = 0;
    for (const Edge& e : a.edges)
        if (e.weight > m) m = e.weight;
    return m;
}

/// Sum of all positive edge weights (overflow-checked).
inline Level positive_weight_sum(const Arena& a) {
    Level s = 0;
    for (const Edge& e : a.edges)
        if (e.weight > 0) s = checked_add(s, e.weight);
    return s;
}

enum class ConstraintKind { L, LU, LW, LV };
enum class Measure { Count, Consecutive, Sum };
enum class Objective { InfiniteRun, Reach };

/// Which energy semantics applies, plus its integer bounds.
struct ConstraintSpec {
    ConstraintKind kind = ConstraintKind::L;
    Level L = 0;
    std::optional<Level> U;
    std::optional<Level> W;
    std::optional<Level> S;
    std::optional<Level> V;
    std::optional<Measure> measure;
    Objective objective = Objective::InfiniteRun;

    void validate(const Arena& a) const {
        switch (kind) {
            case ConstraintKind::L:
                break;
            case ConstraintKind::LU:
                if (!U) throw ArenaError(ArenaErrorKind::Invalid, "LU constraint needs U");
                if (L > *U) throw ArenaError(ArenaErrorKind::Invalid, "need L <= U");
                break;
            case ConstraintKind::LW:
                if (!W) throw ArenaError(ArenaErrorKind::Invalid, "LW constraint needs W");
                if (L > *W) throw ArenaError(ArenaErrorKind::Invalid, "need L <= W");
                break;
            case ConstraintKind::LV:
                if (!U || !S || !V || !measure)
                    throw ArenaError(ArenaErrorKind::Invalid, "LV constraint needs S, U, V and a measure");
                if (*V < 0) throw ArenaError(ArenaErrorKind::Invalid, "need V >= 0");
                if (!(L <= *S && *S <= *U))
                    throw ArenaError(ArenaErrorKind::Invalid, "need L <= S <= U");
                break;
        }
        if (objective == Objective::Reach && a.targets.empty())
            throw ArenaError(ArenaErrorKind::Invalid, "reachability objective needs a target state");
    }
};

/// A concrete play prefix: visited states with their energy levels, plus the
/// edges taken. levels[i] is the energy in states[i]; edges.size()+1 == states.size().
struct Run {
    std::vector<StateId> states;
    std::vector<Level> levels;
    std::vector<int> edges;

    std::size_t length() const { return edges.size(); }
};

}  // namespace enarena

#endif
