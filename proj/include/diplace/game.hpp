#pragma once

// Short normal-play partisan game values.
//
// Every game is a hash-consed node in a process-wide intern table; a Game is
// a handle to such a node. Structurally identical option sets always yield
// the same handle, so literal-form identity (≅) is handle equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diplace/dyadic.hpp"

namespace diplace {

class Game {
public:
    constexpr Game() = default;  // the game 0 = { | }
    static constexpr Game from_id(std::uint32_t id) { return Game(id); }

    std::uint32_t id() const { return id_; }

    std::span<const Game> left() const;
    std::span<const Game> right() const;

    friend constexpr bool operator==(Game, Game) = default;
    friend constexpr auto operator<=>(Game, Game) = default;

private:
    explicit constexpr Game(std::uint32_t id) : id_(id) {}
    std::uint32_t id_ = 0;
};

enum class Outcome { LeftWin, RightWin, NextWin, PreviousWin };
enum class Relation { Less, Greater, Equal, Confused };

const char* to_string(Outcome o);
/// "<", ">", "=", "||".
const char* to_string(Relation r);

/// Interns { lefts | rights }. Options are deduplicated and ordered by id.
Game make_game(std::vector<Game> lefts, std::vector<Game> rights);

inline Game zero() { return Game(); }
Game star();
Game up();
Game down();
Game nimber(unsigned n);

Game negate(Game g);

/// Literal disjunctive sum, no simplification.
Game sum(Game g, Game h);

/// Canonical form of g + h. Equal in value to canonical(sum(g, h)) but
/// computed option-wise on canonical operands, which stays small.
Game add(Game g, Game h);
Game add_all(std::span<const Game> games);

bool leq(Game g, Game h);
Relation compare(Game g, Game h);
inline bool equal(Game g, Game h) { return compare(g, h) == Relation::Equal; }

/// Direct win/loss solve of the literal tree.
Outcome outcome(Game g);
bool left_wins_moving_first(Game g);
bool right_wins_moving_first(Game g);

Game canonical(Game g);
bool is_canonical(Game g);

unsigned birthday(Game g);

/// Dyadic value of a canonical number; absent when g is not a number.
std::optional<Dyadic> as_number(Game g);
Game number_game(const Dyadic& x);

/// canonical(g + x).
Game translate(Game g, const Dyadic& x);
/// { g^L + x | g^R + x } built option by option, then canonicalized.
Game translate_optionwise(Game g, const Dyadic& x);

/// Deterministic bracket encoding independent of intern ids, e.g. "{{|}|}"
/// for 1. Options are listed in lexicographic order of their encodings.
const std::string& bracket_encoding(Game g);

/// Number of nodes currently interned.
std::size_t interned_count();

}  // namespace diplace

template <>
struct std::hash<diplace::Game> {
    std::size_t operator()(diplace::Game g) const noexcept { return std::hash<std::uint32_t>{}(g.id()); }
};
