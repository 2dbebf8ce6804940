#include <sstream>

#include "diplace/conflict.hpp"
#include "diplace/errors.hpp"
#include "json.hpp"

namespace diplace {

using nlohmann::json;

namespace {

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

std::string string_field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j[key].is_string())
        throw ParseError(std::string("expected string field \"") + key + "\"");
    return j[key].get<std::string>();
}

std::vector<std::pair<std::string, std::string>> pairs(const json& doc, const char* key)
{
    std::vector<std::pair<std::string, std::string>> out;
    if (!doc.contains(key)) return out;
    if (!doc[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    for (const json& p : doc[key]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw ParseError(std::string("\"") + key + "\" entries must be [a, b] pairs");
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return out;
}

Eligibility eligibility_of_color(const std::string& s)
{
    if (s == "green" || s == "G") return Eligibility::Both;
    if (s == "blue" || s == "B") return Eligibility::Left;
    if (s == "red" || s == "R") return Eligibility::Right;
    throw ParseError("unknown element color '" + s + "' (expected blue, red or green)");
}

Eligibility eligibility_of_players(const std::string& s)
{
    if (s == "LR" || s == "RL") return Eligibility::Both;
    if (s == "L") return Eligibility::Left;
    if (s == "R") return Eligibility::Right;
    throw ParseError("unknown player set '" + s + "' (expected L, R or LR)");
}

}  // namespace

ConflictSpec parse_conflict_spec(const std::string& json_text)
{
    const json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("moves") || !doc["moves"].is_array())
        throw ParseError("conflict spec needs a \"moves\" array");
    ConflictSpec spec;
    for (const json& m : doc["moves"]) {
        const auto player = string_field(m, "player");
        if (player != "L" && player != "R") throw ParseError("move player must be \"L\" or \"R\"");
        spec.moves.push_back({string_field(m, "id"), player == "L" ? Player::Left : Player::Right});
    }
    if (doc.contains("conflicts")) {
        if (!doc["conflicts"].is_object()) throw ParseError("\"conflicts\" must be an object");
        for (const auto& [id, set] : doc["conflicts"].items()) {
            if (!set.is_array()) throw ParseError("conflict set of " + id + " must be an array");
            auto& out = spec.conflicts[id];
            for (const json& x : set) {
                if (!x.is_string()) throw ParseError("conflict set of " + id + " must hold move ids");
                out.push_back(x.get<std::string>());
            }
        }
    }
    return spec;
}

std::string emit_conflict_spec(const ConflictSpec& spec)
{
    json doc;
    doc["moves"] = json::array();
    for (const auto& m : spec.moves) doc["moves"].push_back({{"id", m.id}, {"player", m.player == Player::Left ? "L" : "R"}});
    doc["conflicts"] = json::object();
    for (const auto& [id, set] : spec.conflicts) doc["conflicts"][id] = set;
    return doc.dump(2) + "\n";
}

PosetPosition parse_poset(const std::string& json_text)
{
    const json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
        throw ParseError("poset needs an \"elements\" array");
    PosetPosition p;
    for (const json& e : doc["elements"]) {
        if (e.is_string()) {
            p.elements.push_back({e.get<std::string>(), Eligibility::Both});
            continue;
        }
        Eligibility el = Eligibility::Both;
        if (e.contains("color")) el = eligibility_of_color(string_field(e, "color"));
        p.elements.push_back({string_field(e, "id"), el});
    }
    p.covers = pairs(doc, "covers");
    return p;
}

DomineeringPosition parse_domineering(const std::string& text)
{
    DomineeringPosition d;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const json doc = parse_json(text);
        if (!doc.contains("grid") || !doc["grid"].is_array()) throw ParseError("domineering needs a \"grid\" array");
        for (const json& row : doc["grid"]) {
            if (!row.is_string()) throw ParseError("grid rows must be strings");
            d.rows.push_back(row.get<std::string>());
        }
        return d;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (!line.empty()) d.rows.push_back(line);
    }
    return d;
}

GraphPosition parse_graph_position(const std::string& json_text)
{
    const json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("graph needs a \"vertices\" array");
    GraphPosition g;
    for (const json& v : doc["vertices"]) {
        if (v.is_string()) {
            g.vertices.push_back({v.get<std::string>(), Eligibility::Both});
            continue;
        }
        Eligibility el = Eligibility::Both;
        if (v.contains("players")) el = eligibility_of_players(string_field(v, "players"));
        g.vertices.push_back({string_field(v, "id"), el});
    }
    g.edges = pairs(doc, "edges");
    return g;
}

}  // namespace diplace
