#include "zdp/poset_json.hpp"

#include "zdp/errors.hpp"

#include <fstream>
#include <sstream>

namespace zdp {

auto poset_to_json(const Poset &p) -> nlohmann::json
{
    nlohmann::json j;
    if (!p.name().empty())
        j["name"] = p.name();
    j["n"] = p.size();
    j["kind"] = "covers";
    auto rel = nlohmann::json::array();
    for (auto [a, b] : p.covers())
        rel.push_back({a, b});
    j["relations"] = rel;
    if (p.has_custom_labels())
        j["labels"] = p.labels();
    return j;
}

auto poset_from_json(const nlohmann::json &j) -> Poset
{
    try {
        if (!j.is_object())
            throw ParseError("poset document must be a JSON object");
        const int n = j.at("n").get<int>();
        const std::string kind = j.value("kind", std::string("covers"));
        RelationKind rk;
        if (kind == "covers")
            rk = RelationKind::covers;
        else if (kind == "le")
            rk = RelationKind::le;
        else
            throw ParseError("unknown relation kind '" + kind + "'");
        std::vector<std::pair<int, int>> rel;
        for (const auto &pair : j.at("relations")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("each relation must be a pair [i, j]");
            rel.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        Poset p = build_poset(n, rel, rk);
        if (j.contains("labels"))
            p = p.with_labels(j.at("labels").get<std::vector<std::string>>());
        if (j.contains("name"))
            p = p.with_name(j.at("name").get<std::string>());
        return p;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed poset JSON: ") + e.what());
    }
}

auto serialize_poset(const Poset &p) -> std::string { return poset_to_json(p).dump(); }

auto parse_poset(const std::string &text) -> Poset
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return poset_from_json(j);
}

auto load_poset_file(const std::string &path) -> Poset
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_poset(ss.str());
}

void save_poset_file(const Poset &p, const std::string &path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << poset_to_json(p).dump(2) << '\n';
}

} // namespace zdp
