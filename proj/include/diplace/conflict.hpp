#pragma once

// Conflict placement games and their compilation to digraph placement.
//
// A conflict placement game is a finite set of moves, each owned by one
// player, where each move m carries a conflict set A(m): m is legal exactly
// while no move of A(m) has been played. Compiling puts an arc u -> v
// whenever u is in A(v), so deleting u removes precisely the moves it
// blocks; the literal forms of the two games coincide.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diplace/digraph.hpp"
#include "diplace/game.hpp"

namespace diplace {

class InvalidSpec : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class InvalidPosition : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConflictMove {
    std::string id;
    Player player;
};

struct ConflictSpec {
    std::vector<ConflictMove> moves;
    /// move id -> ids of the moves whose play makes it illegal
    std::map<std::string, std::vector<std::string>> conflicts;

    /// Unique ids, every conflict reference declared, every move in its own
    /// conflict set. Throws InvalidSpec.
    void validate() const;
};

DigraphGame compile(const ConflictSpec& spec);

/// Literal form by direct play on the conflict semantics.
Game interpret(const ConflictSpec& spec);

enum class Eligibility { Left, Right, Both };

/// Elements with an order given by cover pairs (lower, upper); the order is
/// their reflexive-transitive closure. Choosing x removes every y >= x.
struct PosetPosition {
    struct Element {
        std::string id;
        Eligibility eligible = Eligibility::Both;  // blue / red / green
    };
    std::vector<Element> elements;
    std::vector<std::pair<std::string, std::string>> covers;
};

/// Rows of '.' (free) and '#' (hole). Left places vertical dominoes, Right
/// horizontal ones.
struct DomineeringPosition {
    std::vector<std::string> rows;
};

/// A simple graph with per-vertex move eligibility.
struct GraphPosition {
    struct Node {
        std::string id;
        Eligibility eligible = Eligibility::Both;
    };
    std::vector<Node> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

/// Choosing v removes v and its neighbours for both players.
struct NodeKaylesPosition : GraphPosition {};
/// Colouring v forbids v for both players and v's neighbours for the mover.
struct ColPosition : GraphPosition {};

using RulesetPosition = std::variant<PosetPosition, DomineeringPosition, NodeKaylesPosition, ColPosition>;

/// Throws InvalidPosition.
ConflictSpec to_conflict(const RulesetPosition& position);

/// Chain poset of `size` green elements.
PosetPosition nim_heap(unsigned size);
/// Path on n vertices, every vertex playable by both players.
GraphPosition path_graph(unsigned n);

// File formats.
ConflictSpec parse_conflict_spec(const std::string& json_text);
std::string emit_conflict_spec(const ConflictSpec& spec);
PosetPosition parse_poset(const std::string& json_text);
DomineeringPosition parse_domineering(const std::string& text);
GraphPosition parse_graph_position(const std::string& json_text);

}  // namespace diplace
