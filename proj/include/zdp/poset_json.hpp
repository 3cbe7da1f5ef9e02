#pragma once

#include "zdp/poset.hpp"

#include "json.hpp"

#include <string>

namespace zdp {

/**
 * JSON poset format:
 *
 *   {"name": str?, "n": int, "kind": "covers"|"le", "relations": [[i,j],...], "labels": [str]?}
 *
 * Serialization always writes the covering relation in lexicographic order,
 * and writes "name"/"labels" only when set, so serialize(parse(s)) == s for
 * every document this module produced.
 */
auto poset_to_json(const Poset &p) -> nlohmann::json;
auto poset_from_json(const nlohmann::json &j) -> Poset;

auto serialize_poset(const Poset &p) -> std::string;
auto parse_poset(const std::string &text) -> Poset;

auto load_poset_file(const std::string &path) -> Poset;
void save_poset_file(const Poset &p, const std::string &path);

} // namespace zdp
