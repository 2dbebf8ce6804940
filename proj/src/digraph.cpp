#include "diplace/digraph.hpp"

#include <variant>

#include "engine.hpp"

namespace diplace {

std::size_t DigraphGame::add_vertex(std::string label, Color color)
{
    if (index_of(label)) throw DigraphError(DigraphError::Kind::DuplicateLabel, "duplicate vertex label: " + label);
    vertices_.push_back({std::move(label), color});
    const std::size_t n = vertices_.size();
    for (auto& s : out_) {
        VertexSet grown(n);
        for (std::size_t i : s.indices()) grown.insert(i);
        s = std::move(grown);
    }
    out_.emplace_back(n);
    return n - 1;
}

void DigraphGame::add_arc(std::size_t from, std::size_t to)
{
    if (from >= order() || to >= order()) throw std::out_of_range("arc endpoint out of range");
    if (from == to)
        throw DigraphError(DigraphError::Kind::SelfLoop, "self-arc on " + vertices_[from].label);
    if (out_[from].contains(to))
        throw DigraphError(DigraphError::Kind::DuplicateArc,
                           "duplicate arc " + vertices_[from].label + " -> " + vertices_[to].label);
    out_[from].insert(to);
}

void DigraphGame::add_edge(std::size_t u, std::size_t v)
{
    add_arc(u, v);
    add_arc(v, u);
}

void DigraphGame::add_arc(const std::string& from, const std::string& to) { add_arc(require(from), require(to)); }
void DigraphGame::add_edge(const std::string& u, const std::string& v) { add_edge(require(u), require(v)); }

std::size_t DigraphGame::arc_count() const
{
    std::size_t c = 0;
    for (const auto& s : out_) c += s.count();
    return c;
}

std::optional<std::size_t> DigraphGame::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].label == label) return i;
    return std::nullopt;
}

std::size_t DigraphGame::require(const std::string& label) const
{
    if (auto i = index_of(label)) return *i;
    throw DigraphError(DigraphError::Kind::UnknownLabel, "unknown vertex label: " + label);
}

VertexSet DigraphGame::closed_out(std::size_t v) const
{
    VertexSet s = out_.at(v);
    s.insert(v);
    return s;
}

DigraphGame Residual::induced() const
{
    DigraphGame g(base->name());
    const auto keep = alive.indices();
    for (std::size_t v : keep) g.add_vertex(base->vertex(v).label, base->vertex(v).color);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (i != j && base->has_arc(keep[i], keep[j])) g.add_arc(i, j);
    return g;
}

Residual full_residual(std::shared_ptr<const DigraphGame> g)
{
    VertexSet all = VertexSet::full(g->order());
    return Residual{std::move(g), std::move(all)};
}

Residual residual(const Residual& from, const std::vector<std::string>& sequence)
{
    Residual r = from;
    for (const std::string& label : sequence) {
        const std::size_t v = r.base->require(label);
        if (!r.alive.contains(v))
            throw DigraphError(DigraphError::Kind::IllegalSequence, "vertex already deleted: " + label);
        r.alive -= r.base->closed_out(v);
    }
    return r;
}

Residual residual(std::shared_ptr<const DigraphGame> g, const std::vector<std::string>& sequence)
{
    return residual(full_residual(std::move(g)), sequence);
}

std::vector<std::string> moves(const Residual& r, Player player)
{
    std::vector<std::string> out;
    for (std::size_t v : r.alive.indices())
        if (r.base->vertex(v).color == color_of(player)) out.push_back(r.base->vertex(v).label);
    return out;
}

std::vector<Residual> components(const Residual& r)
{
    const DigraphGame& g = *r.base;
    std::vector<Residual> out;
    VertexSet remaining = r.alive;
    while (!remaining.empty()) {
        const std::size_t seed = remaining.indices().front();
        VertexSet comp(g.order());
        std::vector<std::size_t> stack{seed};
        comp.insert(seed);
        remaining.erase(seed);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : remaining.indices()) {
                if (g.has_arc(u, v) || g.has_arc(v, u)) {
                    comp.insert(v);
                    remaining.erase(v);
                    stack.push_back(v);
                }
            }
        }
        out.push_back(Residual{r.base, std::move(comp)});
    }
    return out;
}

Game to_literal(const Residual& r) { return PositionEvaluator(*r.base).literal(r.alive); }
Game to_literal(const DigraphGame& g) { return PositionEvaluator(g).literal(); }
Game value(const Residual& r) { return PositionEvaluator(*r.base).value(r.alive); }
Game value(const DigraphGame& g) { return PositionEvaluator(g).value(); }

DigraphGame negate_digraph(const DigraphGame& g)
{
    DigraphGame out(g.name());
    for (const Vertex& v : g.vertices()) out.add_vertex(v.label, opposite(v.color));
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v : g.out_neighbours(u).indices()) out.add_arc(u, v);
    return out;
}

namespace {

void append(DigraphGame& out, const DigraphGame& part)
{
    const std::size_t offset = out.order();
    for (const Vertex& v : part.vertices()) {
        std::string label = v.label;
        for (int k = 2; out.index_of(label); ++k) label = v.label + "_" + std::to_string(k);
        out.add_vertex(label, v.color);
    }
    for (std::size_t u = 0; u < part.order(); ++u)
        for (std::size_t v : part.out_neighbours(u).indices()) out.add_arc(offset + u, offset + v);
}

}  // namespace

DigraphGame disjoint_union(const DigraphGame& g, const DigraphGame& h)
{
    DigraphGame out(g.name());
    append(out, g);
    append(out, h);
    return out;
}

DigraphGame disjoint_union(const std::vector<DigraphGame>& parts)
{
    DigraphGame out;
    for (const auto& p : parts) append(out, p);
    return out;
}

struct PositionEvaluator::Impl {
    std::variant<detail::Engine<1>, detail::Engine<2>, detail::Engine<4>, detail::Engine<8>,
                 detail::Engine<16>>
        engine;

    static decltype(engine) make(const DigraphGame& g)
    {
        const std::size_t n = g.order();
        if (n <= 64) return detail::Engine<1>(g);
        if (n <= 128) return detail::Engine<2>(g);
        if (n <= 256) return detail::Engine<4>(g);
        if (n <= 512) return detail::Engine<8>(g);
        if (n <= 1024) return detail::Engine<16>(g);
        throw DigraphError(DigraphError::Kind::TooLarge, "digraph has more than 1024 vertices");
    }
};

PositionEvaluator::PositionEvaluator(const DigraphGame& g)
    : impl_(std::make_unique<Impl>(Impl{Impl::make(g)})), order_(g.order())
{
}

PositionEvaluator::~PositionEvaluator() = default;
PositionEvaluator::PositionEvaluator(PositionEvaluator&&) noexcept = default;
PositionEvaluator& PositionEvaluator::operator=(PositionEvaluator&&) noexcept = default;

Game PositionEvaluator::value(const VertexSet& alive)
{
    return std::visit([&](auto& e) { return e.value(std::decay_t<decltype(e)>::Mask::from(alive)); },
                      impl_->engine);
}

Game PositionEvaluator::literal(const VertexSet& alive)
{
    return std::visit([&](auto& e) { return e.literal(std::decay_t<decltype(e)>::Mask::from(alive)); },
                      impl_->engine);
}

Game PositionEvaluator::value() { return value(VertexSet::full(order_)); }
Game PositionEvaluator::literal() { return literal(VertexSet::full(order_)); }

std::size_t PositionEvaluator::memo_entries() const
{
    return std::visit([](const auto& e) { return e.memo_entries(); }, impl_->engine);
}

std::size_t PositionEvaluator::twin_classes() const
{
    return std::visit([](const auto& e) { return e.twin_classes(); }, impl_->engine);
}

}  // namespace diplace
