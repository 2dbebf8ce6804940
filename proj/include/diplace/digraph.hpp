#pragma once

// Digraph placement positions.
//
// Left deletes a blue vertex v together with its out-neighbourhood N+[v];
// Right does the same with a red vertex. A residual is the base digraph
// restricted to the vertices still alive after a sequence of deletions.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diplace/game.hpp"
#include "diplace/vertex_set.hpp"

namespace diplace {

enum class Color { Blue, Red };
enum class Player { Left, Right };

inline Color color_of(Player p) { return p == Player::Left ? Color::Blue : Color::Red; }
inline Color opposite(Color c) { return c == Color::Blue ? Color::Red : Color::Blue; }

class DigraphError : public std::runtime_error {
public:
    enum class Kind { UnknownLabel, IllegalSequence, SelfLoop, DuplicateArc, DuplicateLabel, TooLarge };
    DigraphError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct Vertex {
    std::string label;
    Color color;
};

/// A 2-coloured simple digraph. No self-arcs; at most one arc per ordered pair.
class DigraphGame {
public:
    DigraphGame() = default;
    explicit DigraphGame(std::string name) : name_(std::move(name)) {}

    std::size_t add_vertex(std::string label, Color color);
    void add_arc(std::size_t from, std::size_t to);
    /// Two opposing arcs.
    void add_edge(std::size_t u, std::size_t v);
    void add_arc(const std::string& from, const std::string& to);
    void add_edge(const std::string& u, const std::string& v);

    std::size_t order() const { return vertices_.size(); }
    std::size_t arc_count() const;
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const VertexSet& out_neighbours(std::size_t v) const { return out_.at(v); }
    bool has_arc(std::size_t from, std::size_t to) const { return out_.at(from).contains(to); }
    std::optional<std::size_t> index_of(const std::string& label) const;
    /// Throws UnknownLabel.
    std::size_t require(const std::string& label) const;

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// N+[v]: v together with its out-neighbours.
    VertexSet closed_out(std::size_t v) const;

    /// Same labels, colours and arcs (name ignored).
    friend bool operator==(const DigraphGame& a, const DigraphGame& b)
    {
        if (a.vertices_.size() != b.vertices_.size()) return false;
        for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
            if (a.vertices_[i].label != b.vertices_[i].label ||
                a.vertices_[i].color != b.vertices_[i].color || !(a.out_[i] == b.out_[i]))
                return false;
        }
        return true;
    }

private:
    std::string name_;
    std::vector<Vertex> vertices_;
    std::vector<VertexSet> out_;
};

/// Base digraph plus the set of vertices still alive.
struct Residual {
    std::shared_ptr<const DigraphGame> base;
    VertexSet alive;

    std::size_t size() const { return alive.count(); }
    /// Induced subgraph on the alive vertices, labels preserved.
    DigraphGame induced() const;
};

Residual full_residual(std::shared_ptr<const DigraphGame> g);

/// G/[u1..ut]. Each ui must still be alive when reached; colours are not
/// checked, so non-alternating sequences are allowed.
Residual residual(std::shared_ptr<const DigraphGame> g, const std::vector<std::string>& sequence);
Residual residual(const Residual& from, const std::vector<std::string>& sequence);

/// Alive vertices of the player's colour.
std::vector<std::string> moves(const Residual& r, Player player);

/// Weakly connected components of the alive induced subgraph.
std::vector<Residual> components(const Residual& r);

/// Exact literal form of the position.
Game to_literal(const Residual& r);
Game to_literal(const DigraphGame& g);

/// Canonical value, computed component-wise.
Game value(const Residual& r);
Game value(const DigraphGame& g);

DigraphGame negate_digraph(const DigraphGame& g);
/// Vertices of h whose labels collide with g's get a numeric suffix.
DigraphGame disjoint_union(const DigraphGame& g, const DigraphGame& h);
DigraphGame disjoint_union(const std::vector<DigraphGame>& parts);

/// Memoizing evaluator bound to one base digraph. The memo is keyed by alive
/// mask, with vertices that are interchangeable by an automorphism
/// (same colour, same in- and out-neighbours) packed to a canonical subset.
class PositionEvaluator {
public:
    explicit PositionEvaluator(const DigraphGame& g);
    ~PositionEvaluator();
    PositionEvaluator(PositionEvaluator&&) noexcept;
    PositionEvaluator& operator=(PositionEvaluator&&) noexcept;

    Game value(const VertexSet& alive);
    Game literal(const VertexSet& alive);
    Game value();
    Game literal();

    std::size_t memo_entries() const;
    /// Number of twin classes with more than one member.
    std::size_t twin_classes() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::size_t order_;
};

/// Memo entry cap from DIPLACE_MEMO_LIMIT_MB (default 1024 MB).
std::size_t memo_limit_bytes();

}  // namespace diplace
