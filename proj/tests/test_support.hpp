#pragma once

// Shared generators and independent oracles for the unit suites.

#include <random>
#include <vector>

#include "diplace/conflict.hpp"
#include "diplace/digraph.hpp"
#include "diplace/game.hpp"

namespace diplace::testing {

/// A random literal form with birthday at most `depth`.
inline Game random_game(std::mt19937& rng, unsigned depth, unsigned max_options = 2)
{
    if (depth == 0) return zero();
    std::uniform_int_distribution<unsigned> count(0, max_options);
    std::uniform_int_distribution<unsigned> sub(0, depth - 1);
    std::vector<Game> lefts, rights;
    const unsigned nl = count(rng), nr = count(rng);
    for (unsigned i = 0; i < nl; ++i) lefts.push_back(random_game(rng, sub(rng), max_options));
    for (unsigned i = 0; i < nr; ++i) rights.push_back(random_game(rng, sub(rng), max_options));
    return make_game(std::move(lefts), std::move(rights));
}

/// Canonical values born by the next day: every {A | B} over subsets of `previous`.
inline std::vector<Game> next_day(const std::vector<Game>& previous)
{
    std::vector<Game> out;
    const std::size_t n = previous.size();
    for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) {
        for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
            std::vector<Game> lefts, rights;
            for (std::size_t i = 0; i < n; ++i) {
                if (a >> i & 1) lefts.push_back(previous[i]);
                if (b >> i & 1) rights.push_back(previous[i]);
            }
            Game c = canonical(make_game(lefts, rights));
            bool seen = false;
            for (Game o : out) seen = seen || o == c;
            if (!seen) out.push_back(c);
        }
    }
    return out;
}

inline std::vector<Game> day_values(unsigned day)
{
    std::vector<Game> values{zero()};
    for (unsigned d = 0; d < day; ++d) values = next_day(values);
    return values;
}

/// Play-based order: g <= h iff Right wins g - h moving second.
inline bool leq_by_play(Game g, Game h)
{
    const Outcome o = outcome(sum(g, negate(h)));
    return o == Outcome::RightWin || o == Outcome::PreviousWin;
}

/// Up to max_n vertices of random colour, each ordered pair an arc with probability 1/3.
inline DigraphGame random_digraph(std::mt19937& rng, std::size_t max_n)
{
    std::uniform_int_distribution<std::size_t> size(0, max_n);
    const std::size_t n = size(rng);
    DigraphGame g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("v" + std::to_string(i), rng() % 2 ? Color::Blue : Color::Red);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && rng() % 3 == 0) g.add_arc(u, v);
    return g;
}

/// Random owners; each move conflicts with itself and with each other move
/// with probability 0.35.
inline ConflictSpec random_spec(std::mt19937& rng, unsigned max_moves)
{
    std::uniform_int_distribution<unsigned> count(0, max_moves);
    std::bernoulli_distribution coin(0.5), sparse(0.35);
    ConflictSpec spec;
    const unsigned n = count(rng);
    for (unsigned i = 0; i < n; ++i)
        spec.moves.push_back({"m" + std::to_string(i), coin(rng) ? Player::Left : Player::Right});
    for (unsigned i = 0; i < n; ++i) {
        auto& set = spec.conflicts[spec.moves[i].id];
        for (unsigned j = 0; j < n; ++j)
            if (i == j || sparse(rng)) set.push_back(spec.moves[j].id);
    }
    return spec;
}

}  // namespace diplace::testing
