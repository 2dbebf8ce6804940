#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diplace/game.hpp"
#include "test_support.hpp"

using namespace diplace;
using diplace::testing::day_values;
using diplace::testing::leq_by_play;
using diplace::testing::random_game;

namespace {

Game one() { return make_game({zero()}, {}); }
Game minus_one() { return make_game({}, {zero()}); }
Game switch_one() { return make_game({one()}, {minus_one()}); }

}  // namespace

TEST_CASE("dyadic arithmetic and simplest numbers")
{
    CHECK(Dyadic(6, 2) == Dyadic(3, 1));
    CHECK(Dyadic(1, 1) + Dyadic(1, 1) == Dyadic(1));
    CHECK(Dyadic(-3, 2).floor() == -1);
    CHECK(Dyadic(-3, 2).ceil() == 0);
    CHECK(Dyadic(-3, 2).to_string() == "-3/4");
    CHECK(Dyadic::simplest_between(std::nullopt, std::nullopt) == Dyadic(0));
    CHECK(Dyadic::simplest_between(Dyadic(0), std::nullopt) == Dyadic(1));
    CHECK(Dyadic::simplest_between(std::nullopt, Dyadic(-2)) == Dyadic(-3));
    CHECK(Dyadic::simplest_between(Dyadic(0), Dyadic(1)) == Dyadic(1, 1));
    CHECK(Dyadic::simplest_between(Dyadic(1, 1), Dyadic(1)) == Dyadic(3, 2));
    CHECK(Dyadic::simplest_between(Dyadic(-5, 1), Dyadic(7)) == Dyadic(0));
    CHECK(Dyadic::simplest_between(Dyadic(5, 3), Dyadic(3, 1)) == Dyadic(1));
    CHECK(Dyadic::simplest_between(Dyadic(5, 3), Dyadic(3, 2)) == Dyadic(11, 4));
}

TEST_CASE("make_game builds the named small games")
{
    CHECK(make_game({}, {}) == zero());
    CHECK(make_game({zero()}, {zero()}) == star());
    CHECK(make_game({zero()}, {}) == number_game(1));
    CHECK(make_game({zero(), zero()}, {}) == make_game({zero()}, {}));
    CHECK(make_game({one(), zero()}, {}) == make_game({zero(), one()}, {}));
}

TEST_CASE("negate")
{
    CHECK(negate(zero()) == zero());
    CHECK(negate(one()) == minus_one());
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        Game g = random_game(rng, 3);
        CHECK(negate(negate(g)) == g);
    }
}

TEST_CASE("sum")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Game g = random_game(rng, 3);
        CHECK(sum(g, zero()) == g);
        CHECK(outcome(sum(g, negate(g))) == Outcome::PreviousWin);
    }
    // * + * has four positions; the first mover always loses
    CHECK(canonical(sum(star(), star())) == zero());
    CHECK(outcome(sum(star(), star())) == Outcome::PreviousWin);
}

TEST_CASE("leq and compare")
{
    CHECK_FALSE(leq(zero(), star()));
    CHECK_FALSE(leq(star(), zero()));
    CHECK_FALSE(leq(switch_one(), one()));
    CHECK_FALSE(leq(one(), switch_one()));
    CHECK(compare(zero(), zero()) == Relation::Equal);
    CHECK(compare(one(), minus_one()) == Relation::Greater);
    CHECK(compare(switch_one(), zero()) == Relation::Confused);
    CHECK(compare(up(), zero()) == Relation::Greater);
    CHECK(compare(down(), star()) == Relation::Confused);
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        Game g = random_game(rng, 3);
        CHECK(leq(g, g));
    }
}

TEST_CASE("outcome")
{
    CHECK(outcome(zero()) == Outcome::PreviousWin);
    CHECK(outcome(star()) == Outcome::NextWin);
    CHECK(outcome(switch_one()) == Outcome::NextWin);
    CHECK(outcome(one()) == Outcome::LeftWin);
    CHECK(outcome(minus_one()) == Outcome::RightWin);
}

TEST_CASE("canonical")
{
    CHECK(canonical(make_game({minus_one(), zero()}, {})) == one());
    CHECK(canonical(sum(one(), minus_one())) == zero());
    // {*|*} = 0 through reversibility
    CHECK(canonical(make_game({star()}, {star()})) == zero());
    // {0,* | 0} = up* is already canonical
    Game up_star = make_game({zero(), star()}, {zero()});
    CHECK(canonical(up_star) == up_star);
    CHECK(canonical(sum(up(), star())) == up_star);
    // down written with a reversible right option
    Game down_long = make_game({star()}, {zero(), star()});
    CHECK(canonical(down_long) == down());
}

TEST_CASE("birthday")
{
    CHECK(birthday(zero()) == 0);
    CHECK(birthday(star()) == 1);
    CHECK(birthday(switch_one()) == 2);
    CHECK(birthday(nimber(3)) == 3);
}

TEST_CASE("numbers")
{
    CHECK(as_number(zero()) == Dyadic(0));
    CHECK(as_number(make_game({zero()}, {one()})) == Dyadic(1, 1));
    CHECK_FALSE(as_number(star()).has_value());
    CHECK_FALSE(as_number(switch_one()).has_value());
    CHECK(number_game(0) == zero());
    CHECK(number_game(Dyadic(1, 1)) == make_game({zero()}, {one()}));
    CHECK(number_game(Dyadic(-3, 2)) == negate(number_game(Dyadic(3, 2))));
    for (std::int64_t num = -64; num <= 64; ++num) {
        for (unsigned e = 0; e <= 6; ++e) {
            const Dyadic x(num, e);
            CHECK(as_number(number_game(x)) == x);
            CHECK(is_canonical(number_game(x)));
        }
    }
}

TEST_CASE("translate")
{
    CHECK(translate(star(), 0) == star());
    const Game two = number_game(2);
    CHECK(translate(switch_one(), 1) == make_game({two}, {zero()}));
    CHECK(translate_optionwise(switch_one(), 1) == translate(switch_one(), 1));
    CHECK(translate(number_game(Dyadic(1, 1)), Dyadic(1, 1)) == one());
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        Game g = canonical(random_game(rng, 3));
        if (as_number(g)) continue;
        const Dyadic x(static_cast<std::int64_t>(rng() % 9) - 4, static_cast<unsigned>(rng() % 3));
        CHECK(translate_optionwise(g, x) == translate(g, x));
        CHECK(translate(g, x) == canonical(sum(g, number_game(x))));
    }
}

TEST_CASE("day-2 values: 22 of them, ordered as the play oracle says")
{
    const auto day1 = day_values(1);
    CHECK(day1.size() == 4);
    const auto day2 = day_values(2);
    REQUIRE(day2.size() == 22);
    for (Game g : day2) {
        CHECK(is_canonical(g));
        CHECK(canonical(canonical(g)) == canonical(g));
        for (Game h : day2) {
            CHECK(leq(g, h) == leq_by_play(g, h));
            if (leq(g, h) && leq(h, g)) CHECK(g == h);
        }
        // outcome/order correspondence
        const Relation r = compare(g, zero());
        switch (outcome(g)) {
        case Outcome::LeftWin: CHECK(r == Relation::Greater); break;
        case Outcome::RightWin: CHECK(r == Relation::Less); break;
        case Outcome::PreviousWin: CHECK(r == Relation::Equal); break;
        case Outcome::NextWin: CHECK(r == Relation::Confused); break;
        }
    }
    // transitivity
    for (Game a : day2)
        for (Game b : day2)
            for (Game c : day2)
                if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
}

TEST_CASE("canonical is idempotent and value preserving on random birthday<=4 games")
{
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        Game g = random_game(rng, 4);
        Game c = canonical(g);
        CHECK(canonical(c) == c);
        CHECK(outcome(sum(c, negate(g))) == Outcome::PreviousWin);
        CHECK(birthday(c) <= birthday(g));
    }
}

TEST_CASE("group laws at value level")
{
    const auto day2 = day_values(2);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, day2.size() - 1);
    for (int i = 0; i < 60; ++i) {
        Game a = day2[pick(rng)], b = day2[pick(rng)], c = day2[pick(rng)];
        CHECK(canonical(sum(a, sum(b, c))) == canonical(sum(sum(a, b), c)));
        CHECK(sum(a, b) == sum(b, a));
        CHECK(add(a, add(b, c)) == canonical(sum(sum(a, b), c)));
    }
}

TEST_CASE("bracket encoding is deterministic")
{
    CHECK(bracket_encoding(zero()) == "{|}");
    CHECK(bracket_encoding(one()) == "{{|}|}");
    CHECK(bracket_encoding(star()) == "{{|}|{|}}");
    CHECK(bracket_encoding(make_game({zero(), one()}, {})) == "{{{|}|},{|}|}");
}
