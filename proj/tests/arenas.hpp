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

#ifndef ENARENA_TESTS_ARENAS_HPP
#define ENARENA_TESTS_ARENAS_HPP

#include "enarena/arena.hpp"

// The worked examples used across the suite. They mirror the files in data/.

// Soft-upper-bound demo: query with L=0, S=3, U=6. The q1 loop pumps energy,
// the q2/q3 pair climbs by +3 per round, the q3 loop sheds energy, and the
// exit to qt costs 5.
inline const char* kSoftDemo =
    "state q0 owner=1 init\n"
    "state q1 owner=1\n"
    "state q2 owner=1\n"
    "state q3 owner=1\n"
    "state qt owner=1 target\n"
    "edge q0 2 q1\n"
    "edge q1 1 q1\n"
    "edge q1 -3 q2\n"
    "edge q2 1 q3\n"
    "edge q3 2 q2\n"
    "edge q3 -5 qt\n"
    "edge q3 -1 q3\n"
    "edge qt 0 qt\n";

// Weak-upper-bound demo: with L=0, W=5 the target is reachable only by
// iterating the q1-q2-q3 cycle to level 4 and then taking the q1-q2-q4 cycle
// once; with W=4 it is unreachable.
inline const char* kWeakDemo =
    "state q0 owner=1 init\n"
    "state q1 owner=1\n"
    "state q2 owner=1\n"
    "state q3 owner=1\n"
    "state q4 owner=1\n"
    "state qt owner=1 target\n"
    "edge q0 0 q1\n"
    "edge q1 2 q2\n"
    "edge q2 -2 q3\n"
    "edge q3 1 q1\n"
    "edge q2 -5 q4\n"
    "edge q4 5 q1\n"
    "edge q1 -5 qt\n"
    "edge qt 0 qt\n";

// Two cycles on q0 with different iteration behaviour under L=0, W=5: the
// 4-edge cycle via q2 peaks at 5 and settles at 1, the 5-edge cycle via
// q4,q5 peaks at 4 and settles at 4.
inline const char* kCyclePair =
    "state q0 owner=1 init\n"
    "state q1 owner=1\n"
    "state q2 owner=1\n"
    "state q3 owner=1\n"
    "state q4 owner=1\n"
    "state q5 owner=1\n"
    "edge q0 2 q1\n"
    "edge q1 3 q2\n"
    "edge q2 -3 q3\n"
    "edge q3 -1 q0\n"
    "edge q1 -1 q4\n"
    "edge q4 2 q5\n"
    "edge q5 1 q3\n";

inline enarena::Arena soft_demo() { return enarena::parse_arena(std::string(kSoftDemo)); }
inline enarena::Arena weak_demo() { return enarena::parse_arena(std::string(kWeakDemo)); }
inline enarena::Arena cycle_pair() { return enarena::parse_arena(std::string(kCyclePair)); }

#endif
