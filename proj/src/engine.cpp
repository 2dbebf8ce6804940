#include "engine.hpp"

#include <algorithm>
#include <cstdlib>

namespace diplace {

std::size_t memo_limit_bytes()
{
    std::size_t mb = 1024;
    if (const char* env = std::getenv("DIPLACE_MEMO_LIMIT_MB")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) mb = v;
    }
    return mb * 1024 * 1024;
}

namespace detail {

namespace {

// u and v can be swapped by an automorphism fixing every other vertex.
bool twins(const DigraphGame& g, std::size_t u, std::size_t v)
{
    if (g.vertex(u).color != g.vertex(v).color) return false;
    if (g.has_arc(u, v) != g.has_arc(v, u)) return false;
    for (std::size_t w = 0; w < g.order(); ++w) {
        if (w == u || w == v) continue;
        if (g.has_arc(u, w) != g.has_arc(v, w) || g.has_arc(w, u) != g.has_arc(w, v)) return false;
    }
    return true;
}

}  // namespace

template <std::size_t W>
Engine<W>::Engine(const DigraphGame& g) : n_(g.order())
{
    closed_out_.resize(n_);
    neighbours_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        closed_out_[v] = Bits<W>::from(g.closed_out(v));
        (g.vertex(v).color == Color::Blue ? blue_ : red_).set(v);
    }
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v : g.out_neighbours(u).indices()) {
            neighbours_[u].set(v);
            neighbours_[v].set(u);
        }
    }

    std::vector<bool> assigned(n_, false);
    for (std::size_t u = 0; u < n_; ++u) {
        if (assigned[u]) continue;
        assigned[u] = true;
        movers_.set(u);
        std::vector<std::size_t> members{u};
        for (std::size_t v = u + 1; v < n_; ++v) {
            if (assigned[v]) continue;
            bool all = true;
            for (std::size_t m : members) all = all && twins(g, m, v);
            if (!all) continue;
            members.push_back(v);
            assigned[v] = true;
        }
        if (members.size() < 2) continue;
        TwinClass c;
        c.prefix.emplace_back();
        for (std::size_t m : members) {
            c.members.set(m);
            Bits<W> next = c.prefix.back();
            next.set(m);
            c.prefix.push_back(next);
        }
        classes_.push_back(std::move(c));
    }

    const std::size_t entry_bytes = sizeof(Bits<W>) + sizeof(Game) + 32;
    max_entries_ = std::max<std::size_t>(1024, memo_limit_bytes() / entry_bytes);
    if (flat()) {
        flat_value_.assign(std::size_t{1} << n_, kUnset);
        flat_literal_.assign(std::size_t{1} << n_, kUnset);
    }
}

template <std::size_t W>
Bits<W> Engine<W>::compact(Bits<W> mask) const
{
    for (const TwinClass& c : classes_) {
        const std::size_t k = (mask & c.members).count();
        mask = (mask - c.members) | c.prefix[k];
    }
    return mask;
}

template <std::size_t W>
std::vector<Bits<W>> Engine<W>::split(Bits<W> mask) const
{
    std::vector<Bits<W>> parts;
    while (!mask.none()) {
        Bits<W> comp;
        comp.set(mask.lowest());
        Bits<W> frontier = comp;
        while (!frontier.none()) {
            Bits<W> reach;
            frontier.for_each([&](std::size_t v) { reach = reach | neighbours_[v]; });
            frontier = (reach & mask) - comp;
            comp = comp | frontier;
        }
        parts.push_back(comp);
        mask = mask - comp;
    }
    return parts;
}

template <std::size_t W>
void Engine<W>::enforce_limit()
{
    if (value_memo_.size() + literal_memo_.size() > max_entries_) {
        value_memo_.clear();
        literal_memo_.clear();
    }
}

template <std::size_t W>
Game Engine<W>::value(Bits<W> alive)
{
    if (alive.none()) return zero();
    const auto parts = split(alive);
    if (parts.size() == 1) return component_value(compact(parts[0]));
    Game total = zero();
    for (const auto& p : parts) total = add(total, component_value(compact(p)));
    return total;
}

template <std::size_t W>
Game Engine<W>::component_value(Bits<W> key)
{
    if (key.count() == 1) return (key & blue_).none() ? number_game(-1) : number_game(1);
    if (flat()) {
        const std::uint32_t hit = flat_value_[key.w[0]];
        if (hit != kUnset) return Game::from_id(hit);
    } else if (auto it = value_memo_.find(key); it != value_memo_.end()) {
        return it->second;
    }
    std::vector<Game> lefts, rights;
    (key & blue_ & movers_).for_each([&](std::size_t v) { lefts.push_back(value(key - closed_out_[v])); });
    (key & red_ & movers_).for_each([&](std::size_t v) { rights.push_back(value(key - closed_out_[v])); });
    const Game result = canonical(make_game(std::move(lefts), std::move(rights)));
    if (flat()) {
        flat_value_[key.w[0]] = result.id();
    } else {
        enforce_limit();
        value_memo_.emplace(key, result);
    }
    return result;
}

template <std::size_t W>
Game Engine<W>::literal(Bits<W> alive)
{
    const Bits<W> key = compact(alive);
    if (flat()) {
        const std::uint32_t hit = flat_literal_[key.w[0]];
        if (hit != kUnset) return Game::from_id(hit);
    } else if (auto it = literal_memo_.find(key); it != literal_memo_.end()) {
        return it->second;
    }
    std::vector<Game> lefts, rights;
    (key & blue_ & movers_).for_each([&](std::size_t v) { lefts.push_back(literal(key - closed_out_[v])); });
    (key & red_ & movers_).for_each([&](std::size_t v) { rights.push_back(literal(key - closed_out_[v])); });
    const Game result = make_game(std::move(lefts), std::move(rights));
    if (flat()) {
        flat_literal_[key.w[0]] = result.id();
    } else {
        enforce_limit();
        literal_memo_.emplace(key, result);
    }
    return result;
}

template <std::size_t W>
std::size_t Engine<W>::memo_entries() const
{
    if (flat()) {
        std::size_t c = 0;
        for (auto x : flat_value_) c += x != kUnset;
        for (auto x : flat_literal_) c += x != kUnset;
        return c;
    }
    return value_memo_.size() + literal_memo_.size();
}

template class Engine<1>;
template class Engine<2>;
template class Engine<4>;
template class Engine<8>;
template class Engine<16>;

}  // namespace detail
}  // namespace diplace
