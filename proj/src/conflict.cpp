#include "diplace/conflict.hpp"

#include <cstdint>
#include <set>
#include <unordered_map>

namespace diplace {

namespace {

const char* player_tag(Player p) { return p == Player::Left ? "L" : "R"; }

std::vector<Player> players(Eligibility e)
{
    switch (e) {
    case Eligibility::Left: return {Player::Left};
    case Eligibility::Right: return {Player::Right};
    case Eligibility::Both: return {Player::Left, Player::Right};
    }
    return {};
}

std::map<std::string, std::size_t> index_moves(const ConflictSpec& spec)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < spec.moves.size(); ++i) index.emplace(spec.moves[i].id, i);
    return index;
}

class Interpreter {
public:
    explicit Interpreter(const ConflictSpec& spec)
    {
        const auto index = index_moves(spec);
        blockers_.assign(spec.moves.size(), 0);
        for (std::size_t i = 0; i < spec.moves.size(); ++i) {
            auto it = spec.conflicts.find(spec.moves[i].id);
            if (it != spec.conflicts.end())
                for (const auto& id : it->second) blockers_[i] |= std::uint64_t{1} << index.at(id);
            (spec.moves[i].player == Player::Left ? left_ : right_).push_back(i);
        }
    }

    // State: the set of moves played so far.
    Game play(std::uint64_t played)
    {
        if (auto it = memo_.find(played); it != memo_.end()) return it->second;
        std::vector<Game> lefts, rights;
        for (std::size_t m : left_)
            if ((blockers_[m] & played) == 0) lefts.push_back(play(played | std::uint64_t{1} << m));
        for (std::size_t m : right_)
            if ((blockers_[m] & played) == 0) rights.push_back(play(played | std::uint64_t{1} << m));
        const Game g = make_game(std::move(lefts), std::move(rights));
        memo_.emplace(played, g);
        return g;
    }

private:
    std::vector<std::uint64_t> blockers_;
    std::vector<std::size_t> left_, right_;
    std::unordered_map<std::uint64_t, Game> memo_;
};

std::string cell(std::size_t r, std::size_t c) { return "r" + std::to_string(r) + "c" + std::to_string(c); }

ConflictSpec poset_spec(const PosetPosition& p)
{
    const std::size_t n = p.elements.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(p.elements[i].id, i).second)
            throw InvalidPosition("duplicate poset element " + p.elements[i].id);
    }
    // below[y][x]: x <= y
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) below[i][i] = true;
    for (const auto& [lo, hi] : p.covers) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end() || b == index.end()) throw InvalidPosition("cover references unknown element");
        if (a->second == b->second) throw InvalidPosition("cover relation must be irreflexive: " + lo);
        below[b->second][a->second] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (below[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (below[k][j]) below[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (below[i][j] && below[j][i]) throw InvalidPosition("order relation has a cycle");

    ConflictSpec spec;
    for (const auto& e : p.elements)
        for (Player pl : players(e.eligible)) spec.moves.push_back({e.id + ":" + player_tag(pl), pl});
    for (std::size_t y = 0; y < n; ++y) {
        for (Player py : players(p.elements[y].eligible)) {
            auto& set = spec.conflicts[p.elements[y].id + ":" + player_tag(py)];
            for (std::size_t x = 0; x < n; ++x) {
                if (!below[y][x]) continue;
                for (Player px : players(p.elements[x].eligible))
                    set.push_back(p.elements[x].id + ":" + player_tag(px));
            }
        }
    }
    return spec;
}

ConflictSpec domineering_spec(const DomineeringPosition& d)
{
    const std::size_t rows = d.rows.size();
    const std::size_t cols = rows ? d.rows[0].size() : 0;
    for (const auto& row : d.rows) {
        if (row.size() != cols) throw InvalidPosition("domineering grid must be rectangular");
        for (char c : row)
            if (c != '.' && c != '#') throw InvalidPosition(std::string("unexpected grid character '") + c + "'");
    }
    auto free = [&](std::size_t r, std::size_t c) { return d.rows[r][c] == '.'; };

    struct Placement {
        std::string id;
        Player player;
        std::set<std::string> cells;
    };
    std::vector<Placement> placements;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (r + 1 < rows && free(r, c) && free(r + 1, c))
                placements.push_back({cell(r, c) + ":V", Player::Left, {cell(r, c), cell(r + 1, c)}});
            if (c + 1 < cols && free(r, c) && free(r, c + 1))
                placements.push_back({cell(r, c) + ":H", Player::Right, {cell(r, c), cell(r, c + 1)}});
        }
    }
    ConflictSpec spec;
    for (const auto& p : placements) {
        spec.moves.push_back({p.id, p.player});
        auto& set = spec.conflicts[p.id];
        for (const auto& q : placements) {
            bool overlap = false;
            for (const auto& x : q.cells) overlap = overlap || p.cells.count(x);
            if (overlap) set.push_back(q.id);
        }
    }
    return spec;
}

struct GraphIndex {
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<bool>> adjacent;
};

GraphIndex index_graph(const GraphPosition& g)
{
    GraphIndex gi;
    const std::size_t n = g.vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!gi.index.emplace(g.vertices[i].id, i).second)
            throw InvalidPosition("duplicate vertex " + g.vertices[i].id);
    gi.adjacent.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : g.edges) {
        auto u = gi.index.find(a), v = gi.index.find(b);
        if (u == gi.index.end() || v == gi.index.end()) throw InvalidPosition("edge references unknown vertex");
        if (u->second == v->second) throw InvalidPosition("graph must be simple (loop at " + a + ")");
        if (gi.adjacent[u->second][v->second]) throw InvalidPosition("graph must be simple (repeated edge)");
        gi.adjacent[u->second][v->second] = gi.adjacent[v->second][u->second] = true;
    }
    return gi;
}

template <class Conflicts>
ConflictSpec graph_spec(const GraphPosition& g, Conflicts&& conflicts_with)
{
    const GraphIndex gi = index_graph(g);
    ConflictSpec spec;
    for (const auto& v : g.vertices)
        for (Player p : players(v.eligible)) spec.moves.push_back({v.id + ":" + player_tag(p), p});
    const std::size_t n = g.vertices.size();
    for (std::size_t v = 0; v < n; ++v) {
        for (Player pv : players(g.vertices[v].eligible)) {
            auto& set = spec.conflicts[g.vertices[v].id + ":" + player_tag(pv)];
            for (std::size_t u = 0; u < n; ++u)
                for (Player pu : players(g.vertices[u].eligible))
                    if (conflicts_with(v, pv, u, pu, gi.adjacent[u][v]))
                        set.push_back(g.vertices[u].id + ":" + player_tag(pu));
        }
    }
    return spec;
}

}  // namespace

void ConflictSpec::validate() const
{
    const auto index = index_moves(*this);
    if (index.size() != moves.size()) throw InvalidSpec("duplicate move id");
    for (const auto& [id, set] : conflicts) {
        if (!index.count(id)) throw InvalidSpec("conflict set for undeclared move " + id);
        for (const auto& other : set)
            if (!index.count(other)) throw InvalidSpec("conflict set of " + id + " references undeclared move " + other);
    }
    for (const auto& m : moves) {
        auto it = conflicts.find(m.id);
        bool self = false;
        if (it != conflicts.end())
            for (const auto& other : it->second) self = self || other == m.id;
        if (!self) throw InvalidSpec("move " + m.id + " is not in its own conflict set");
    }
}

DigraphGame compile(const ConflictSpec& spec)
{
    spec.validate();
    DigraphGame g;
    for (const auto& m : spec.moves) g.add_vertex(m.id, color_of(m.player));
    for (const auto& [target, set] : spec.conflicts) {
        const std::size_t v = g.require(target);
        std::set<std::size_t> sources;
        for (const auto& id : set) sources.insert(g.require(id));
        for (std::size_t u : sources)
            if (u != v) g.add_arc(u, v);
    }
    return g;
}

Game interpret(const ConflictSpec& spec)
{
    spec.validate();
    if (spec.moves.size() > 64) throw InvalidSpec("interpreter supports at most 64 moves");
    return Interpreter(spec).play(0);
}

ConflictSpec to_conflict(const RulesetPosition& position)
{
    return std::visit(
        [](const auto& p) -> ConflictSpec {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PosetPosition>) {
                return poset_spec(p);
            } else if constexpr (std::is_same_v<T, DomineeringPosition>) {
                return domineering_spec(p);
            } else if constexpr (std::is_same_v<T, NodeKaylesPosition>) {
                return graph_spec(p, [](std::size_t v, Player, std::size_t u, Player, bool adjacent) {
                    return u == v || adjacent;
                });
            } else {
                return graph_spec(p, [](std::size_t v, Player pv, std::size_t u, Player pu, bool adjacent) {
                    return u == v || (adjacent && pu == pv);
                });
            }
        },
        position);
}

PosetPosition nim_heap(unsigned size)
{
    PosetPosition p;
    for (unsigned i = 1; i <= size; ++i) {
        p.elements.push_back({"e" + std::to_string(i), Eligibility::Both});
        if (i > 1) p.covers.emplace_back("e" + std::to_string(i - 1), "e" + std::to_string(i));
    }
    return p;
}

GraphPosition path_graph(unsigned n)
{
    GraphPosition g;
    for (unsigned i = 1; i <= n; ++i) {
        g.vertices.push_back({"v" + std::to_string(i), Eligibility::Both});
        if (i > 1) g.edges.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
    }
    return g;
}

}  // namespace diplace
