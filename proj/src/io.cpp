#include "diplace/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace diplace {

using nlohmann::json;

namespace {

Color parse_color(const json& j)
{
    if (!j.is_string()) throw ParseError("vertex color must be a string");
    const auto s = j.get<std::string>();
    if (s == "blue" || s == "B") return Color::Blue;
    if (s == "red" || s == "R") return Color::Red;
    throw ParseError("unknown color '" + s + "' (expected blue or red)");
}

std::pair<std::string, std::string> parse_pair(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError("arc/edge entries must be [from, to] label pairs");
    return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace

DigraphGame parse_digraph(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) throw ParseError("digraph document must be a JSON object");
    DigraphGame g;
    if (doc.contains("name") && doc["name"].is_string()) g.set_name(doc["name"].get<std::string>());
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ParseError("missing \"vertices\" array");
    for (const json& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("color"))
            throw ParseError("vertex entries need string \"id\" and \"color\"");
        g.add_vertex(v["id"].get<std::string>(), parse_color(v["color"]));
    }
    auto lookup = [&g](const std::string& label) {
        auto i = g.index_of(label);
        if (!i) throw ParseError("arc references unknown vertex '" + label + "'");
        return *i;
    };
    if (doc.contains("arcs")) {
        for (const json& a : doc["arcs"]) {
            auto [from, to] = parse_pair(a);
            g.add_arc(lookup(from), lookup(to));
        }
    }
    if (doc.contains("edges")) {
        for (const json& e : doc["edges"]) {
            auto [u, v] = parse_pair(e);
            g.add_edge(lookup(u), lookup(v));
        }
    }
    return g;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

DigraphGame load_digraph(const std::string& path) { return parse_digraph(read_file(path)); }

std::string emit_digraph_json(const DigraphGame& g, int indent)
{
    json doc;
    if (!g.name().empty()) doc["name"] = g.name();
    doc["vertices"] = json::array();
    for (const Vertex& v : g.vertices())
        doc["vertices"].push_back({{"id", v.label}, {"color", v.color == Color::Blue ? "blue" : "red"}});
    doc["arcs"] = json::array();
    doc["edges"] = json::array();
    for (std::size_t u = 0; u < g.order(); ++u) {
        for (std::size_t v : g.out_neighbours(u).indices()) {
            const auto& a = g.vertex(u).label;
            const auto& b = g.vertex(v).label;
            if (g.has_arc(v, u)) {
                if (u < v) doc["edges"].push_back({a, b});
            } else {
                doc["arcs"].push_back({a, b});
            }
        }
    }
    return doc.dump(indent) + "\n";
}

std::string emit_digraph_dot(const DigraphGame& g)
{
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "digraph " << quote(g.name().empty() ? "G" : g.name()) << " {\n";
    for (const Vertex& v : g.vertices()) {
        if (v.color == Color::Blue)
            out << "  " << quote(v.label) << " [shape=circle, style=filled, fillcolor=blue];\n";
        else
            out << "  " << quote(v.label) << " [shape=box, style=filled, fillcolor=red];\n";
    }
    for (std::size_t u = 0; u < g.order(); ++u) {
        for (std::size_t v : g.out_neighbours(u).indices()) {
            const bool mutual = g.has_arc(v, u);
            if (mutual && v < u) continue;
            out << "  " << quote(g.vertex(u).label) << " -> " << quote(g.vertex(v).label)
                << (mutual ? " [dir=none]" : "") << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace diplace
