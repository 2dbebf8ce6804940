#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "diplace/conflict.hpp"
#include "diplace/errors.hpp"
#include "test_support.hpp"

using namespace diplace;

namespace {

// Board-tree oracle for Domineering, independent of the conflict encoding.
Game domineering_oracle(std::vector<std::string> rows)
{
    static std::map<std::vector<std::string>, Game> memo;
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    std::vector<Game> lefts, rights;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] != '.') continue;
            if (r + 1 < rows.size() && rows[r + 1][c] == '.') {
                auto next = rows;
                next[r][c] = next[r + 1][c] = '#';
                lefts.push_back(domineering_oracle(next));
            }
            if (c + 1 < rows[r].size() && rows[r][c + 1] == '.') {
                auto next = rows;
                next[r][c] = next[r][c + 1] = '#';
                rights.push_back(domineering_oracle(next));
            }
        }
    }
    Game g = make_game(lefts, rights);
    memo.emplace(std::move(rows), g);
    return g;
}

Game via_digraph(const ConflictSpec& s) { return value(compile(s)); }

}  // namespace

TEST_CASE("validation")
{
    ConflictSpec s;
    s.moves = {{"a", Player::Left}};
    CHECK_THROWS_AS(s.validate(), InvalidSpec);
    s.conflicts["a"] = {"a", "b"};
    CHECK_THROWS_AS(s.validate(), InvalidSpec);
    s.conflicts["a"] = {"a"};
    CHECK_NOTHROW(s.validate());
    s.moves.push_back({"a", Player::Right});
    CHECK_THROWS_AS(compile(s), InvalidSpec);
}

TEST_CASE("compile and interpret small specs")
{
    CHECK(interpret(ConflictSpec{}) == zero());
    CHECK(compile(ConflictSpec{}).order() == 0);

    ConflictSpec single;
    single.moves = {{"a", Player::Left}};
    single.conflicts["a"] = {"a"};
    const DigraphGame g = compile(single);
    CHECK(g.order() == 1);
    CHECK(g.arc_count() == 0);
    CHECK(g.vertex(0).color == Color::Blue);
    CHECK(value(g) == number_game(1));

    ConflictSpec pair;
    pair.moves = {{"l", Player::Left}, {"r", Player::Right}};
    pair.conflicts["l"] = {"l", "r"};
    pair.conflicts["r"] = {"r", "l"};
    CHECK(interpret(pair) == star());
    CHECK(compile(pair).has_arc(0, 1));
    CHECK(compile(pair).has_arc(1, 0));
}

TEST_CASE("arc direction follows conflict membership")
{
    ConflictSpec s;
    s.moves = {{"a", Player::Left}, {"b", Player::Right}};
    s.conflicts["a"] = {"a"};
    s.conflicts["b"] = {"b", "a"};  // playing a kills b
    const DigraphGame g = compile(s);
    CHECK(g.has_arc(0, 1));
    CHECK_FALSE(g.has_arc(1, 0));
    CHECK(interpret(s) == to_literal(g));
}

TEST_CASE("random specs keep their literal form")
{
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        const ConflictSpec s = testing::random_spec(rng, 6);
        const DigraphGame g = compile(s);
        CHECK(g.order() == s.moves.size());
        CHECK(interpret(s) == to_literal(g));
    }
}

TEST_CASE("poset adapter")
{
    for (unsigned n = 1; n <= 4; ++n) {
        const ConflictSpec s = to_conflict(nim_heap(n));
        CHECK(s.moves.size() == 2 * n);
        CHECK(via_digraph(s) == nimber(n));
        CHECK(interpret(s) == to_literal(compile(s)));
    }
    for (unsigned n = 1; n <= 4; ++n) {
        PosetPosition anti;
        std::vector<Game> stars;
        for (unsigned i = 0; i < n; ++i) {
            anti.elements.push_back({"a" + std::to_string(i), Eligibility::Both});
            stars.push_back(star());
        }
        CHECK(via_digraph(to_conflict(anti)) == add_all(stars));
    }
    // A blue element below a red one: Left's move also removes Right's.
    PosetPosition two;
    two.elements = {{"lo", Eligibility::Left}, {"hi", Eligibility::Right}};
    two.covers = {{"lo", "hi"}};
    const ConflictSpec s = to_conflict(two);
    CHECK(s.conflicts.at("hi:R").size() == 2);
    CHECK(interpret(s) == make_game({zero()}, {number_game(1)}));

    PosetPosition cyclic;
    cyclic.elements = {{"a", Eligibility::Both}, {"b", Eligibility::Both}};
    cyclic.covers = {{"a", "b"}, {"b", "a"}};
    CHECK_THROWS_AS(to_conflict(cyclic), InvalidPosition);
}

TEST_CASE("domineering adapter")
{
    const ConflictSpec square = to_conflict(DomineeringPosition{{"..", ".."}});
    CHECK(square.moves.size() == 4);
    CHECK(via_digraph(square) == make_game({number_game(1)}, {number_game(-1)}));

    const ConflictSpec column = to_conflict(DomineeringPosition{{".", "."}});
    CHECK(column.moves.size() == 1);
    CHECK(column.moves[0].id == "r0c0:V");
    CHECK(via_digraph(column) == number_game(1));
    CHECK(via_digraph(to_conflict(DomineeringPosition{{".."}})) == number_game(-1));

    const std::vector<std::vector<std::string>> boards{
        {"...", "..."}, {"..#", "..."}, {"...", ".#.", "..."}, {"....", "...."}, {"...", "...", "..."}};
    for (const auto& rows : boards) {
        const ConflictSpec s = to_conflict(DomineeringPosition{rows});
        CHECK(interpret(s) == domineering_oracle(rows));
        CHECK(via_digraph(s) == canonical(domineering_oracle(rows)));
    }
    CHECK_THROWS_AS(to_conflict(DomineeringPosition{{"..", "."}}), InvalidPosition);
    CHECK_THROWS_AS(to_conflict(DomineeringPosition{{".x"}}), InvalidPosition);
}

TEST_CASE("node kayles adapter")
{
    // Impartial Node Kayles on a path of three: options 0 and *.
    NodeKaylesPosition p3{path_graph(3)};
    CHECK(via_digraph(to_conflict(p3)) == nimber(2));
    NodeKaylesPosition p2{path_graph(2)};
    CHECK(via_digraph(to_conflict(p2)) == star());

    NodeKaylesPosition partisan;
    partisan.vertices = {{"a", Eligibility::Left}, {"b", Eligibility::Right}, {"c", Eligibility::Left}};
    partisan.edges = {{"a", "b"}};
    const ConflictSpec s = to_conflict(partisan);
    CHECK(s.moves.size() == 3);
    CHECK(via_digraph(s) == add(star(), number_game(1)));

    NodeKaylesPosition loop{path_graph(1)};
    loop.edges = {{"v1", "v1"}};
    CHECK_THROWS_AS(to_conflict(loop), InvalidPosition);
}

TEST_CASE("col adapter")
{
    ColPosition edge{path_graph(2)};
    const Game v = via_digraph(to_conflict(edge));
    const bool number_or_star = as_number(v).has_value() || as_number(add(v, star())).has_value();
    CHECK(number_or_star);
    CHECK(v == zero());

    std::mt19937 rng(5);
    std::bernoulli_distribution coin(0.4);
    for (int t = 0; t < 12; ++t) {
        ColPosition g;
        for (int i = 0; i < 4; ++i) g.vertices.push_back({"v" + std::to_string(i), Eligibility::Both});
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (coin(rng)) g.edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
        const ConflictSpec s = to_conflict(g);
        const Game x = via_digraph(s);
        CHECK((as_number(x).has_value() || as_number(add(x, star())).has_value()));
        CHECK(interpret(s) == to_literal(compile(s)));
    }
}

TEST_CASE("json round trip and parsers")
{
    std::mt19937 rng(77);
    for (int i = 0; i < 10; ++i) {
        const ConflictSpec s = testing::random_spec(rng, 5);
        const ConflictSpec back = parse_conflict_spec(emit_conflict_spec(s));
        CHECK(interpret(back) == interpret(s));
    }
    const ConflictSpec spec = parse_conflict_spec(
        R"({"moves":[{"id":"a","player":"L"},{"id":"b","player":"R"}],"conflicts":{"a":["a","b"],"b":["b","a"]}})");
    CHECK(interpret(spec) == star());
    CHECK_THROWS_AS(parse_conflict_spec(R"({"moves":[{"id":"a","player":"X"}]})"), ParseError);
    CHECK_THROWS_AS(parse_conflict_spec("{"), ParseError);

    const PosetPosition p = parse_poset(R"({"elements":["a",{"id":"b","color":"blue"}],"covers":[["a","b"]]})");
    CHECK(p.elements.size() == 2);
    CHECK(p.elements[1].eligible == Eligibility::Left);
    CHECK(p.covers.size() == 1);

    const DomineeringPosition d = parse_domineering("..\n.#\n");
    CHECK(d.rows == std::vector<std::string>{"..", ".#"});
    CHECK(parse_domineering(R"({"grid":[".", "."]})").rows.size() == 2);

    const GraphPosition g = parse_graph_position(R"({"vertices":["x",{"id":"y","players":"R"}],"edges":[["x","y"]]})");
    CHECK(g.vertices[1].eligible == Eligibility::Right);
    CHECK_THROWS_AS(parse_graph_position(R"({"vertices":[{"id":"y","players":"Q"}]})"), ParseError);
}
