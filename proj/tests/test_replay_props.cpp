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

#include "lw_props.hpp"

// Fast per-property smoke at 150 cases; the acceptance suite runs the same
// properties at 500+.

TEST_CASE("weak-bound replay properties") {
    for (const auto& [name, prop] : lw_props::all_properties()) {
        CAPTURE(name);
        lw_props::PropertyResult res = lw_props::run_property(150, prop);
        CHECK(res.cases >= 150);
        CHECK(res.failures == 0);
        if (res.failures) MESSAGE(res.firstFailure);
    }
}
