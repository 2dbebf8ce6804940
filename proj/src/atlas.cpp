#include "diplace/atlas.hpp"

#include "diplace/expr.hpp"
#include "diplace/io.hpp"

namespace diplace {

namespace {

struct Fixture {
    const char* name;
    std::size_t drawn;
    const char* json;
};

// Vertices are numbered as in the drawings; B is blue, R is red.
const Fixture kFixtures[] = {
    {"-2", 2, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"R"}]})"},
    {"2", 2, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"B"}]})"},
    {"-1", 1, R"({"vertices":[{"id":"1","color":"R"}]})"},
    {"1", 1, R"({"vertices":[{"id":"1","color":"B"}]})"},
    {"-1+*", 3, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"B"},{"id":"3","color":"R"}],
                  "edges":[["1","2"]]})"},
    {"1+*", 3, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"B"},{"id":"3","color":"B"}],
                 "edges":[["1","2"]]})"},
    {"-1/2", 2, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"R"}],"arcs":[["2","1"]]})"},
    {"1/2", 2, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"B"}],"arcs":[["2","1"]]})"},
    {"{*|-1}", 4, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"R"},{"id":"3","color":"B"},{"id":"4","color":"R"}],
                    "edges":[["1","4"],["2","3"]],"arcs":[["1","3"],["2","1"]]})"},
    {"{1|*}", 4, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"B"},{"id":"3","color":"R"},{"id":"4","color":"B"}],
                   "edges":[["1","4"],["2","3"]],"arcs":[["1","3"],["2","1"]]})"},
    {"{0|-1}", 3, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"R"},{"id":"3","color":"B"}],
                    "edges":[["1","3"],["2","3"]]})"},
    {"{1|0}", 3, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"B"},{"id":"3","color":"R"}],
                   "edges":[["1","3"],["2","3"]]})"},
    {"down", 4, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"B"},{"id":"3","color":"B"},{"id":"4","color":"R"}],
                  "edges":[["1","2"],["3","4"]],"arcs":[["1","3"],["1","4"]]})"},
    {"up", 4, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"R"},{"id":"3","color":"R"},{"id":"4","color":"B"}],
                "edges":[["1","2"],["3","4"]],"arcs":[["1","3"],["1","4"]]})"},
    {"down+*", 3, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"R"},{"id":"3","color":"R"}],
                    "edges":[["1","2"]],"arcs":[["1","3"],["2","3"]]})"},
    {"up+*", 3, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"B"},{"id":"3","color":"B"}],
                  "edges":[["1","2"]],"arcs":[["1","3"],["2","3"]]})"},
    {"{0,*|-1}", 4, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"R"},{"id":"3","color":"B"},{"id":"4","color":"R"}],
                      "edges":[["1","4"],["2","3"],["2","1"]],"arcs":[["1","3"]]})"},
    {"{1|0,*}", 4, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"B"},{"id":"3","color":"R"},{"id":"4","color":"B"}],
                     "edges":[["1","4"],["2","3"],["2","1"]],"arcs":[["1","3"]]})"},
    {"0", 0, R"({"vertices":[]})"},
    {"*", 2, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"R"}],"edges":[["1","2"]]})"},
    {"*2", 4, R"({"vertices":[{"id":"1","color":"R"},{"id":"2","color":"B"},{"id":"3","color":"B"},{"id":"4","color":"R"}],
                "edges":[["1","2"],["3","4"]],"arcs":[["3","1"],["3","2"],["4","1"],["4","2"]]})"},
    {"{1|-1}", 4, R"({"vertices":[{"id":"1","color":"B"},{"id":"2","color":"R"},{"id":"3","color":"B"},{"id":"4","color":"R"}],
                    "edges":[["1","2"],["2","3"],["3","4"],["4","1"]]})"},
};

std::string describe_failures(const AtlasReport& report)
{
    std::string out = "atlas mismatch:";
    for (const auto& e : report.entries)
        if (!e.pass) out += " " + e.name;
    return out;
}

}  // namespace

const std::vector<AtlasEntry>& atlas()
{
    static const std::vector<AtlasEntry> entries = [] {
        std::vector<AtlasEntry> out;
        for (const Fixture& f : kFixtures) {
            DigraphGame g = parse_digraph(f.json);
            g.set_name(f.name);
            out.push_back({f.name, f.drawn, std::move(g)});
        }
        return out;
    }();
    return entries;
}

bool AtlasReport::all_pass() const
{
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

AtlasMismatch::AtlasMismatch(AtlasReport report)
    : std::runtime_error(describe_failures(report)), report_(std::move(report))
{
}

AtlasReport check_atlas()
{
    AtlasReport report;
    for (const AtlasEntry& e : atlas()) {
        const Game expected = parse_expr(e.name);
        const Game actual = value(e.digraph);
        report.entries.push_back(
            {e.name, expected, actual, e.digraph.order(), e.drawn, actual == expected && e.digraph.order() == e.drawn});
    }
    return report;
}

AtlasReport verify_atlas()
{
    AtlasReport report = check_atlas();
    if (!report.all_pass()) throw AtlasMismatch(std::move(report));
    return report;
}

}  // namespace diplace
