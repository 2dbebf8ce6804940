#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>

#include "diplace/digraph.hpp"
#include "diplace/io.hpp"
#include "test_support.hpp"

using namespace diplace;

namespace {

std::shared_ptr<const DigraphGame> fixture(const std::string& name)
{
    return std::make_shared<const DigraphGame>(load_digraph(std::string(DIPLACE_DATA_DIR) + "/" + name));
}

Game one() { return number_game(1); }

DigraphGame half_graph()
{
    DigraphGame g("half");
    g.add_vertex("r", Color::Red);
    g.add_vertex("b", Color::Blue);
    g.add_arc("b", "r");
    return g;
}

DigraphGame star_pair()
{
    DigraphGame g("star");
    g.add_vertex("u", Color::Blue);
    g.add_vertex("v", Color::Red);
    g.add_edge("u", "v");
    return g;
}

Game fig1_target() { return add_all(std::vector<Game>{number_game(2), down(), star()}); }

}  // namespace

TEST_CASE("residual")
{
    auto fig2 = fixture("fig2.json");
    CHECK(residual(fig2, {}).alive.count() == 10);

    auto half = std::make_shared<const DigraphGame>(half_graph());
    CHECK(residual(half, {"b"}).alive.empty());
    auto after_red = residual(half, {"r"});
    CHECK(after_red.alive.count() == 1);
    CHECK(after_red.alive.contains(*half->index_of("b")));

    CHECK_THROWS_AS(residual(half, {"zz"}), DigraphError);
    try {
        residual(half, {"b", "r"});
        FAIL("expected IllegalSequence");
    } catch (const DigraphError& e) {
        CHECK(e.kind() == DigraphError::Kind::IllegalSequence);
    }
}

TEST_CASE("moves")
{
    auto empty = std::make_shared<const DigraphGame>();
    CHECK(moves(full_residual(empty), Player::Left).empty());

    auto right = fixture("fig1_right.json");
    auto left_moves = moves(full_residual(right), Player::Left);
    CHECK(left_moves == std::vector<std::string>{"b1", "b2", "b4"});
    // Right deletes the apex red vertex r5 (no out-arcs); r3 remains
    auto after = residual(right, {"r5"});
    CHECK(moves(after, Player::Right) == std::vector<std::string>{"r3"});
}

TEST_CASE("components")
{
    auto left = fixture("fig1_left.json");
    auto comps = components(full_residual(left));
    std::vector<std::size_t> sizes;
    for (const auto& c : comps) sizes.push_back(c.size());
    std::sort(sizes.rbegin(), sizes.rend());
    CHECK(sizes == std::vector<std::size_t>{6, 2, 1, 1});

    auto connected = std::make_shared<const DigraphGame>(star_pair());
    CHECK(components(full_residual(connected)).size() == 1);
    CHECK(components(full_residual(std::make_shared<const DigraphGame>())).empty());
}

TEST_CASE("to_literal")
{
    DigraphGame blue;
    blue.add_vertex("x", Color::Blue);
    CHECK(to_literal(blue) == make_game({zero()}, {}));
    CHECK(to_literal(star_pair()) == star());
    CHECK(to_literal(half_graph()) == make_game({zero()}, {one()}));
}

TEST_CASE("value of the figure graphs")
{
    CHECK(value(*fixture("fig1_right.json")) == fig1_target());
    CHECK(value(*fixture("fig1_left.json")) == fig1_target());
    CHECK(value(*fixture("fig2.json")) == nimber(2));
    CHECK(value(DigraphGame()) == zero());
}

TEST_CASE("negation and union")
{
    CHECK(value(negate_digraph(half_graph())) == number_game(Dyadic(-1, 1)));
    DigraphGame b, r;
    b.add_vertex("a", Color::Blue);
    r.add_vertex("a", Color::Red);
    const DigraphGame u = disjoint_union(b, r);
    CHECK(u.order() == 2);
    CHECK(u.vertex(1).label == "a_2");
    CHECK(value(u) == zero());
    std::mt19937 rng(1);
    for (int i = 0; i < 20; ++i) {
        DigraphGame g = testing::random_digraph(rng, 5);
        CHECK(negate_digraph(negate_digraph(g)) == g);
    }
}

TEST_CASE("sum and negation laws on random small digraphs")
{
    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
        DigraphGame g = testing::random_digraph(rng, 5), h = testing::random_digraph(rng, 5);
        CHECK(value(disjoint_union(g, h)) == canonical(sum(value(g), value(h))));
        CHECK(value(negate_digraph(g)) == canonical(negate(value(g))));
        CHECK(value(g) == canonical(to_literal(g)));
    }
}

TEST_CASE("left options of the literal form are exactly the blue deletions")
{
    std::mt19937 rng(8);
    for (int i = 0; i < 50; ++i) {
        auto g = std::make_shared<const DigraphGame>(testing::random_digraph(rng, 6));
        const Residual r = full_residual(g);
        const Game lit = to_literal(r);
        std::vector<Game> expected;
        for (const auto& v : moves(r, Player::Left)) expected.push_back(to_literal(residual(r, {v})));
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        CHECK(std::vector<Game>(lit.left().begin(), lit.left().end()) == expected);
    }
}

TEST_CASE("residuals commute when both orders are legal")
{
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        auto g = std::make_shared<const DigraphGame>(testing::random_digraph(rng, 6));
        if (g->order() < 2) continue;
        const auto& u = g->vertex(rng() % g->order()).label;
        const auto& v = g->vertex(rng() % g->order()).label;
        if (u == v || g->has_arc(g->require(u), g->require(v)) || g->has_arc(g->require(v), g->require(u)))
            continue;
        CHECK(residual(g, {u, v}).alive == residual(g, {v, u}).alive);
    }
}

TEST_CASE("value is invariant under relabeling")
{
    std::mt19937 rng(21);
    for (int i = 0; i < 50; ++i) {
        DigraphGame g = testing::random_digraph(rng, 6);
        std::vector<std::size_t> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        DigraphGame p;
        for (std::size_t k = 0; k < g.order(); ++k)
            p.add_vertex("w" + std::to_string(k), g.vertex(perm[k]).color);
        std::vector<std::size_t> where(g.order());
        for (std::size_t k = 0; k < g.order(); ++k) where[perm[k]] = k;
        for (std::size_t u = 0; u < g.order(); ++u)
            for (std::size_t v : g.out_neighbours(u).indices()) p.add_arc(where[u], where[v]);
        CHECK(value(p) == value(g));
        CHECK(to_literal(p) == to_literal(g));
    }
}

TEST_CASE("twin packing does not change literal forms")
{
    // four isolated red vertices plus a blue hub pointing at all of them
    DigraphGame g;
    g.add_vertex("hub", Color::Blue);
    for (int i = 0; i < 4; ++i) {
        g.add_vertex("y" + std::to_string(i), Color::Red);
        g.add_arc("hub", "y" + std::to_string(i));
    }
    PositionEvaluator ev(g);
    CHECK(ev.twin_classes() == 1);
    // hub deletes all; a red move leaves the same shape with one red fewer
    Game expected = one();
    for (int k = 1; k <= 4; ++k) expected = make_game({zero()}, {expected});
    CHECK(ev.value() == canonical(to_literal(g)));
    CHECK(ev.value() == canonical(expected));
}

TEST_CASE("chunked masks beyond 64 vertices")
{
    // 70 isolated blue vertices and a red one pointing at all of them
    DigraphGame g;
    for (int i = 0; i < 70; ++i) g.add_vertex("b" + std::to_string(i), Color::Blue);
    g.add_vertex("r", Color::Red);
    for (int i = 0; i < 70; ++i) g.add_arc("r", "b" + std::to_string(i));
    // Right kills everything; a blue move leaves the same shape with one blue fewer
    Game expected = number_game(-1);
    for (int k = 1; k <= 70; ++k) expected = canonical(make_game({expected}, {zero()}));
    CHECK(value(g) == expected);
    CHECK(canonical(to_literal(g)) == expected);
}

TEST_CASE("digraph construction errors")
{
    DigraphGame g;
    g.add_vertex("a", Color::Blue);
    CHECK_THROWS_AS(g.add_vertex("a", Color::Red), DigraphError);
    CHECK_THROWS_AS(g.add_arc("a", "a"), DigraphError);
    g.add_vertex("b", Color::Red);
    g.add_arc("a", "b");
    CHECK_THROWS_AS(g.add_arc("a", "b"), DigraphError);
}
