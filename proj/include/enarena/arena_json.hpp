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

#ifndef ENARENA_ARENA_JSON_HPP
#define ENARENA_ARENA_JSON_HPP

#include <fstream>

#include <json.hpp>

#include "enarena/arena.hpp"

namespace enarena {

/// JSON equivalent of the text format:
/// {"states":[{"name":"q0","owner":1,"init":true,"target":false},...],
///  "edges":[{"src":"q0","weight":2,"dst":"q1"},...]}
inline Arena parse_arena_json(const nlohmann::json& j) {
    ArenaBuilder b;
    if (!j.contains("states") || !j.contains("edges"))
        throw ArenaError(ArenaErrorKind::Syntax, "arena json needs 'states' and 'edges'");
    for (const auto& s : j.at("states")) {
        int owner = s.at("owner").get<int>();
        if (owner != 1 && owner != 2)
            throw ArenaError(ArenaErrorKind::Syntax, "owner must be 1 or 2");
        b.add_state(s.at("name").get<std::string>(), owner == 1 ? Player::One : Player::Two,
                    s.value("init", false), s.value("target", false));
    }
    for (const auto& e : j.at("edges"))
        b.add_edge(e.at("src").get<std::string>(), e.at("weight").get<Weight>(),
                   e.at("dst").get<std::string>());
    return b.finish();
}

inline nlohmann::ordered_json arena_to_json(const Arena& a) {
    nlohmann::ordered_json j;
    j["states"] = nlohmann::ordered_json::array();
    for (int q = 0; q < a.size(); ++q) {
        nlohmann::ordered_json s;
        s["name"] = a.names[q];
        s["owner"] = a.owner[q] == Player::One ? 1 : 2;
        if (q == a.initial) s["init"] = true;
        if (a.targetMask[q]) s["target"] = true;
        j["states"].push_back(s);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : a.edges)
        j["edges"].push_back({{"src", a.names[e.src]}, {"weight", e.weight}, {"dst", a.names[e.dst]}});
    return j;
}

/// Dispatch on the file extension: `.json` uses the JSON schema, anything
/// else the line-oriented text format.
inline Arena load_arena_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArenaError(ArenaErrorKind::Syntax, "cannot open '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        in >> j;
        return parse_arena_json(j);
    }
    return parse_arena(in);
}

}  // namespace enarena

#endif
