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

#include <doctest.h>

#include "enarena/arena_json.hpp"
#include "enarena/verify.hpp"

#include "arenas.hpp"

using namespace enarena;

TEST_CASE("parsing the soft-bound demo") {
    Arena a = soft_demo();
    CHECK(a.size() == 5);
    CHECK(a.edges.size() == 8);
    CHECK(a.names[a.initial] == "q0");
    REQUIRE(a.targets.size() == 1);
    CHECK(a.names[a.targets[0]] == "qt");
    CHECK(a.one_player());
}

TEST_CASE("parsing the weak-bound demo") {
    Arena a = weak_demo();
    CHECK(a.size() == 6);
    CHECK(a.edges.size() == 8);  // 7 drawn edges plus the mandatory target self-loop
    CHECK(a.names[a.initial] == "q0");
    CHECK(a.names[a.targets.at(0)] == "qt");
}

TEST_CASE("parse errors carry their kind and line") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_arena(text);
        } catch (const ArenaError& e) {
            return e.kind;
        }
        return ArenaErrorKind::Invalid;
    };
    CHECK(kind_of("state a owner=1 init\nstate b owner=1\nedge a 1 a\n") ==
          ArenaErrorKind::MissingOutgoingEdge);
    CHECK(kind_of("state a owner=1 init\nedge a 1 nosuch\n") == ArenaErrorKind::UnknownState);
    CHECK(kind_of("state a owner=1 init\nstate a owner=1\nedge a 0 a\n") ==
          ArenaErrorKind::DuplicateState);
    CHECK(kind_of("state a owner=1\nedge a 0 a\n") == ArenaErrorKind::NoInitialState);
    CHECK(kind_of("state a owner=1 init\nedge a x a\n") == ArenaErrorKind::Syntax);
    CHECK(kind_of("state a owner=3 init\nedge a 0 a\n") == ArenaErrorKind::Syntax);

    try {
        parse_arena(std::string("state a owner=1 init\nedge a oops a\n"));
        CHECK(false);
    } catch (const ArenaError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("serialize then parse is the identity") {
    for (const char* text : {kSoftDemo, kWeakDemo, kCyclePair}) {
        Arena a = parse_arena(std::string(text));
        CHECK(same_arena(a, parse_arena(serialize_arena(a))));
    }

    GenParams p;
    p.seed = 7;
    p.states = 6;
    p.p2Fraction = 0.4;
    Arena a7 = random_arena(p);
    CHECK(same_arena(a7, parse_arena(serialize_arena(a7))));

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GenParams q;
        q.seed = seed;
        q.states = 2 + static_cast<int>(seed % 7);
        q.p2Fraction = 0.3;
        q.targetCount = static_cast<int>(seed % 3);
        Arena a = random_arena(q);
        CHECK(same_arena(a, parse_arena(serialize_arena(a))));
    }
}

TEST_CASE("arena with no targets round-trips") {
    Arena a = cycle_pair();
    CHECK(a.targets.empty());
    CHECK(same_arena(a, parse_arena(serialize_arena(a))));
}

TEST_CASE("two parses of the same text agree on state order") {
    Arena a = soft_demo(), b = soft_demo();
    CHECK(a.names == b.names);
    CHECK(same_arena(a, b));
}

TEST_CASE("max_pos_weight") {
    CHECK(max_pos_weight(soft_demo()) == 2);
    CHECK(max_pos_weight(weak_demo()) == 5);
    Arena neg = parse_arena(std::string("state a owner=1 init\nedge a -3 a\nedge a 0 a\n"));
    CHECK(max_pos_weight(neg) == 0);
}

TEST_CASE("json arena round-trip and validation") {
    Arena a = weak_demo();
    Arena b = parse_arena_json(arena_to_json(a));
    CHECK(same_arena(a, b));

    nlohmann::json bad = {{"states", {{{"name", "a"}, {"owner", 5}, {"init", true}}}},
                          {"edges", nlohmann::json::array()}};
    CHECK_THROWS_AS(parse_arena_json(bad), ArenaError);
}

TEST_CASE("constraint spec validation") {
    Arena a = soft_demo();
    ConstraintSpec lu;
    lu.kind = ConstraintKind::LU;
    CHECK_THROWS_AS(lu.validate(a), ArenaError);  // U missing
    lu.U = -1;
    CHECK_THROWS_AS(lu.validate(a), ArenaError);  // L > U

    ConstraintSpec lv;
    lv.kind = ConstraintKind::LV;
    lv.S = 4;
    lv.U = 3;
    lv.V = 0;
    lv.measure = Measure::Count;
    CHECK_THROWS_AS(lv.validate(a), ArenaError);  // S > U

    ConstraintSpec reach;
    reach.objective = Objective::Reach;
    CHECK_THROWS_AS(reach.validate(cycle_pair()), ArenaError);  // no target
    CHECK_NOTHROW(reach.validate(a));
}

TEST_CASE("weights close to the 64-bit edge are rejected loudly") {
    CHECK_THROWS_AS(checked_add(std::numeric_limits<Level>::max(), 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(std::numeric_limits<Level>::max() / 2, 3), OverflowError);
}
