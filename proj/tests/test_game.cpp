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

#include "enarena/verify.hpp"

#include "arenas.hpp"

using namespace enarena;

TEST_CASE("attractor basics") {
    Arena a = weak_demo();
    GameView g = game_view(a);

    std::vector<int> all;
    for (int q = 0; q < a.size(); ++q) all.push_back(q);
    WinningRegion whole = attractor(g, all, Player::One);
    for (int q = 0; q < a.size(); ++q) CHECK(whole.winner[q] == Player::One);

    WinningRegion toTarget = attractor(g, a.targets, Player::One);
    for (int q = 0; q < a.size(); ++q) CHECK(toTarget.winner[q] == Player::One);
}

TEST_CASE("an opposing state with an escape is not attracted") {
    Arena a = parse_arena(std::string(
        "state p owner=2 init\nstate t owner=1 target\nstate u owner=1\n"
        "edge p 0 t\nedge p 0 u\nedge u 0 u\nedge t 0 t\n"));
    WinningRegion r = attractor(game_view(a), a.targets, Player::One);
    CHECK(r.winner[a.find("p")] == Player::Two);
    CHECK(r.winner[a.find("t")] == Player::One);
}

TEST_CASE("safety extremes") {
    Arena a = weak_demo();
    GameView g = game_view(a);
    WinningRegion nothing = solve_safety(g, {}, Player::One);
    for (int q = 0; q < a.size(); ++q) CHECK(nothing.winner[q] == Player::One);

    std::vector<int> all;
    for (int q = 0; q < a.size(); ++q) all.push_back(q);
    WinningRegion everything = solve_safety(g, all, Player::One);
    for (int q = 0; q < a.size(); ++q) CHECK(everything.winner[q] == Player::Two);
}

TEST_CASE("attractor strategies reach, safety strategies stay") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GenParams p;
        p.seed = seed;
        p.states = 5;
        p.p2Fraction = 0.5;
        Arena a = random_arena(p);
        ExpandedArena ex = build_lw(a, 0, 3);
        GameView g = game_view(ex);

        WinningRegion attr = attractor(g, ex.targets, Player::One);
        std::vector<bool> isTarget(ex.size(), false);
        for (int t : ex.targets) isTarget[t] = true;

        // fixed point: no outside node could extend the attractor
        for (int c = 0; c < ex.size(); ++c) {
            if (attr.winner[c] == Player::One) continue;
            bool all = true, any = false;
            for (int ei : ex.out[c]) {
                bool in = attr.winner[ex.edges[ei].dst] == Player::One;
                all = all && in;
                any = any || in;
            }
            if (ex.owner[c] == Player::One)
                CHECK(!any);
            else
                CHECK(!all);
        }
        for (int c = 0; c < ex.size(); ++c) {
            if (attr.winner[c] != Player::One) continue;
            // simulate: P1 follows the strategy, P2 takes its lowest edge that
            // stays in the winning region when possible, else any edge
            int cur = c;
            bool reached = isTarget[cur];
            for (int step = 0; step <= ex.size() && !reached; ++step) {
                int next = -1;
                if (ex.owner[cur] == Player::One) {
                    REQUIRE(attr.strategy[cur] >= 0);
                    next = ex.edges[attr.strategy[cur]].dst;
                } else {
                    for (int ei : ex.out[cur]) {
                        next = ex.edges[ei].dst;
                        if (attr.winner[next] == Player::One) break;
                    }
                }
                REQUIRE(next >= 0);
                CHECK(attr.winner[next] == Player::One);
                cur = next;
                reached = isTarget[cur];
            }
            CHECK(reached);
        }

        std::vector<int> avoid;
        for (int c = 0; c < ex.size(); ++c)
            if (ex.bad[c]) avoid.push_back(c);
        WinningRegion safe = solve_safety(g, avoid, Player::One);
        for (int c = 0; c < ex.size(); ++c) {
            if (safe.winner[c] != Player::One || ex.owner[c] != Player::One) continue;
            REQUIRE(safe.strategy[c] >= 0);
            int next = ex.edges[safe.strategy[c]].dst;
            CHECK(safe.winner[next] == Player::One);
            CHECK(!ex.bad[next]);
        }
    }
}

TEST_CASE("single-state energy games") {
    Arena pump = parse_arena(std::string("state a owner=1 init\nedge a 1 a\n"));
    CHECK(solve_l_energy(pump, 0).winner[0] == Player::One);

    Arena drain = parse_arena(std::string("state a owner=1 init\nedge a -1 a\n"));
    CHECK(solve_l_energy(drain, 0).winner[0] == Player::Two);
}

TEST_CASE("energy winner is invariant under translating the bound") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GenParams p;
        p.seed = seed;
        p.states = 5;
        p.p2Fraction = 0.4;
        Arena a = random_arena(p);
        auto at0 = solve_l_energy(a, 0);
        for (Level L : {-3, 5}) {
            auto atL = solve_l_energy(a, L);
            CHECK(atL.winner == at0.winner);
        }
    }
}

TEST_CASE("energy solver agrees with the capped oracle") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GenParams p;
        p.seed = seed;
        p.states = 2 + static_cast<int>(seed % 5);
        p.p2Fraction = seed % 2 ? 0.4 : 0.0;
        Arena a = random_arena(p);
        bool solver = solve_l_energy(a, 0).winner[a.initial] == Player::One;
        ExpandedArena ex = build_l_capped(a, 0);
        bool oracle = oracle_solve(ex, Objective::InfiniteRun).winner[ex.init] == Player::One;
        CHECK(solver == oracle);
    }
}

TEST_CASE("progress-measure strategy survives a bounded simulation") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenParams p;
        p.seed = seed;
        p.states = 4;
        p.p2Fraction = 0.5;
        Arena a = random_arena(p);
        if (a.one_player()) continue;
        WinningRegion r = solve_l_energy(a, 0);
        if (r.winner[a.initial] != Player::One) continue;
        // P1 follows the measure strategy, P2 plays adversarially (first edge
        // staying in P2's region if any); the level must stay above 0.
        StateId cur = a.initial;
        Level level = 0;
        for (int step = 0; step < 3 * a.size(); ++step) {
            int edge = -1;
            if (a.owner[cur] == Player::One) {
                edge = r.strategy[cur];
                REQUIRE(edge >= 0);
            } else {
                edge = a.out[cur][0];
                for (int ei : a.out[cur])
                    if (r.winner[a.edges[ei].dst] == Player::Two) {
                        edge = ei;
                        break;
                    }
            }
            level += a.edges[edge].weight;
            CHECK(level >= 0);
            cur = a.edges[edge].dst;
        }
    }
}

TEST_CASE("winning configurations are upward closed in energy") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenParams p;
        p.seed = seed;
        p.states = 4;
        p.p2Fraction = 0.5;
        Arena a = random_arena(p);
        ExpandedArena ex = build_lw(a, 0, 4);
        WinningRegion r = oracle_solve(ex, Objective::Reach);
        for (int c = 0; c < ex.size(); ++c) {
            if (r.winner[c] != Player::One || ex.configs[c].tag != ConfigTag::Plain) continue;
            for (int d = 0; d < ex.size(); ++d) {
                if (ex.configs[d].tag != ConfigTag::Plain) continue;
                if (ex.configs[d].state == ex.configs[c].state &&
                    ex.configs[d].level >= ex.configs[c].level)
                    CHECK(r.winner[d] == Player::One);
            }
        }
    }
}

TEST_CASE("shortest witness on the soft-bound demo under [0;6]") {
    // The displayed 10-edge run in the source example is not minimal: BFS and
    // the bounded-run oracle both find 8 edges (pump q1 to 4, climb the
    // q2/q3 pair to 5, exit).
    Arena a = soft_demo();
    auto w = shortest_witness(build_lu(a, 0, 6));
    REQUIRE(w);
    CHECK(w->length() == 8);
    ConstraintSpec spec{ConstraintKind::LU, 0, 6, {}, {}, {}, {}, Objective::Reach};
    CHECK(run_is_valid(a, spec, *w));
    CHECK(a.targetMask[w->states.back()]);

    auto oracle = bounded_run_oracle(a, spec, 40);
    REQUIRE(oracle);
    CHECK(oracle->length() == 8);
}

TEST_CASE("unreachable targets yield no witness") {
    auto w = shortest_witness(build_lu(soft_demo(), 0, 3));
    CHECK(!w);
}

TEST_CASE("shortest witness on the ladder") {
    Arena lad = lw_ladder_arena(4, 1);
    auto w = shortest_witness(build_lw(lad, 0, 4));
    REQUIRE(w);
    CHECK(w->length() == 18);  // 3W + Wk + 2
}

TEST_CASE("shortest witness demands a one-player arena") {
    Arena a = parse_arena(std::string(
        "state p owner=2 init\nstate t owner=1 target\nedge p 0 t\nedge t 0 t\n"));
    CHECK_THROWS_AS(shortest_witness(build_lu(a, 0, 1)), std::invalid_argument);
}
