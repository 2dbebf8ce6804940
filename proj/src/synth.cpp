#include "diplace/synth.hpp"

#include <algorithm>
#include <map>

namespace diplace {

namespace {

void append_prefixed(DigraphGame& out, const DigraphGame& part, const std::string& prefix)
{
    const std::size_t offset = out.order();
    for (const Vertex& v : part.vertices()) out.add_vertex(prefix + v.label, v.color);
    for (std::size_t u = 0; u < part.order(); ++u)
        for (std::size_t v : part.out_neighbours(u).indices()) out.add_arc(offset + u, offset + v);
}

DigraphGame integer_digraph(std::int64_t k)
{
    DigraphGame g;
    const Color c = k >= 0 ? Color::Blue : Color::Red;
    const char* tag = k >= 0 ? "b" : "r";
    for (std::int64_t i = 1; i <= (k >= 0 ? k : -k); ++i) g.add_vertex(tag + std::to_string(i), c);
    return g;
}

Game expected_gadget_value(const std::vector<Game>& lefts, const std::vector<Game>& rights)
{
    std::vector<Game> l{number_game(-1)}, r{number_game(1)};
    l.insert(l.end(), lefts.begin(), lefts.end());
    r.insert(r.end(), rights.begin(), rights.end());
    return canonical(make_game(l, r));
}

class Synthesizer {
public:
    SynthesisResult run(Game x)
    {
        SynthesisResult out;
        out.digraph = build(canonical(x), 0);
        out.trace = std::move(trace_);
        return out;
    }

private:
    DigraphGame build(Game x, unsigned depth)
    {
        if (auto it = done_.find(x); it != done_.end()) return it->second;
        SynthesisRule rule;
        DigraphGame g = construct(x, depth, rule);
        if (value(g) != x)
            throw SynthesisFailure("witness for " + bracket_encoding(x) + " has the wrong value");
        trace_.push_back({depth, x, rule, g.order()});
        done_.emplace(x, g);
        return g;
    }

    DigraphGame construct(Game x, unsigned depth, SynthesisRule& rule)
    {
        if (auto number = as_number(x)) {
            if (number->exponent() == 0) {
                rule = SynthesisRule::Integer;
                return integer_digraph(number->numerator());
            }
            rule = SynthesisRule::Stalk;
            return stalk(*number);
        }

        GadgetPlan plan;
        std::size_t largest = 0;
        for (Game y : x.left()) {
            plan.lefts.push_back(build(y, depth + 1));
            largest = std::max(largest, plan.lefts.back().order());
        }
        for (Game z : x.right()) {
            plan.rights.push_back(build(z, depth + 1));
            largest = std::max(largest, plan.rights.back().order());
        }
        const std::size_t m = largest + 1;
        plan.n = static_cast<unsigned>(2 * m + 2);
        DigraphGame g = gadget(plan);
        const Game got = value(g);
        const std::vector<Game> ls(x.left().begin(), x.left().end());
        const std::vector<Game> rs(x.right().begin(), x.right().end());
        if (got != expected_gadget_value(ls, rs))
            throw GadgetMismatch("gadget for " + bracket_encoding(x) + " misses its predicted value");
        if (got == x) {
            rule = SynthesisRule::Gadget;
            return g;
        }

        if (compare(x, number_game(1)) == Relation::Greater) {
            // least integer above x
            std::int64_t above = -static_cast<std::int64_t>(birthday(x));
            while (!(compare(x, number_game(above)) == Relation::Less)) ++above;
            rule = SynthesisRule::Translate;
            const DigraphGame shifted = build(translate(x, Dyadic(1 - above)), depth + 1);
            return disjoint_union(shifted, integer_digraph(above - 1));
        }
        if (compare(x, number_game(-1)) == Relation::Less) {
            rule = SynthesisRule::Negate;
            return negate_digraph(build(negate(x), depth + 1));
        }
        throw SynthesisFailure("no construction applies to " + bracket_encoding(x));
    }

    std::map<Game, DigraphGame, bool (*)(Game, Game)> done_{[](Game a, Game b) { return a.id() < b.id(); }};
    std::vector<SynthesisStep> trace_;
};

}  // namespace

std::size_t gadget_order(const GadgetPlan& plan)
{
    std::size_t total = 2 * std::size_t{plan.n} + plan.lefts.size() + plan.rights.size();
    for (const auto& g : plan.lefts) total += g.order();
    for (const auto& h : plan.rights) total += h.order();
    return total;
}

DigraphGame gadget(const GadgetPlan& plan)
{
    const std::size_t k = plan.lefts.size(), t = plan.rights.size();
    DigraphGame g;
    // part[i] = [begin, end) of sub-digraph i; Left options first
    std::vector<std::pair<std::size_t, std::size_t>> part;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t begin = g.order();
        append_prefixed(g, plan.lefts[i], "L" + std::to_string(i + 1) + "/");
        part.emplace_back(begin, g.order());
    }
    for (std::size_t j = 0; j < t; ++j) {
        const std::size_t begin = g.order();
        append_prefixed(g, plan.rights[j], "R" + std::to_string(j + 1) + "/");
        part.emplace_back(begin, g.order());
    }
    const std::size_t inner = g.order();
    std::vector<std::size_t> br, xy;
    for (std::size_t i = 0; i < k; ++i) br.push_back(g.add_vertex("b" + std::to_string(i + 1), Color::Blue));
    for (std::size_t j = 0; j < t; ++j) br.push_back(g.add_vertex("r" + std::to_string(j + 1), Color::Red));
    for (unsigned l = 0; l < plan.n; ++l) xy.push_back(g.add_vertex("x" + std::to_string(l + 1), Color::Blue));
    for (unsigned l = 0; l < plan.n; ++l) xy.push_back(g.add_vertex("y" + std::to_string(l + 1), Color::Red));

    // different sub-digraphs are fully joined
    for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = a + 1; b < part.size(); ++b)
            for (std::size_t u = part[a].first; u < part[a].second; ++u)
                for (std::size_t v = part[b].first; v < part[b].second; ++v) g.add_edge(u, v);
    // b's and r's form a clique joined to every x and y
    for (std::size_t a = 0; a < br.size(); ++a) {
        for (std::size_t b = a + 1; b < br.size(); ++b) g.add_edge(br[a], br[b]);
        for (std::size_t w : xy) g.add_edge(br[a], w);
    }
    // the i-th b or r is pointed at by its own sub-digraph and joined to the rest
    for (std::size_t i = 0; i < br.size(); ++i) {
        for (std::size_t p = 0; p < part.size(); ++p) {
            for (std::size_t u = part[p].first; u < part[p].second; ++u) {
                if (p == i)
                    g.add_arc(u, br[i]);
                else
                    g.add_edge(u, br[i]);
            }
        }
    }
    // x's point at every sub-digraph vertex, blue ones point back; y's mirror with red
    for (std::size_t u = 0; u < inner; ++u) {
        const Color c = g.vertex(u).color;
        for (std::size_t l = 0; l < plan.n; ++l) {
            g.add_arc(xy[l], u);
            if (c == Color::Blue) g.add_arc(u, xy[l]);
            g.add_arc(xy[plan.n + l], u);
            if (c == Color::Red) g.add_arc(u, xy[plan.n + l]);
        }
    }
    return g;
}

Game gadget_value_check(const GadgetPlan& plan)
{
    std::vector<Game> ls, rs;
    for (const auto& g : plan.lefts) ls.push_back(value(g));
    for (const auto& h : plan.rights) rs.push_back(value(h));
    const Game got = value(gadget(plan));
    if (got != expected_gadget_value(ls, rs))
        throw GadgetMismatch("gadget value " + bracket_encoding(got) + " differs from its predicted value");
    return got;
}

std::string sign_expansion(const Dyadic& x)
{
    std::string signs;
    std::optional<Dyadic> lo, hi;
    Dyadic current(0);
    while (current != x) {
        if (x > current) {
            signs += '+';
            lo = current;
        } else {
            signs += '-';
            hi = current;
        }
        current = Dyadic::simplest_between(lo, hi);
    }
    return signs;
}

DigraphGame stalk(const Dyadic& x)
{
    const std::string signs = sign_expansion(x);
    DigraphGame g;
    for (std::size_t i = 0; i < signs.size(); ++i)
        g.add_vertex("s" + std::to_string(i + 1), signs[i] == '+' ? Color::Blue : Color::Red);
    for (std::size_t i = 0; i < signs.size(); ++i)
        for (std::size_t j = i + 1; j < signs.size(); ++j) g.add_arc(i, j);
    return g;
}

DigraphGame nimber_digraph(unsigned n)
{
    DigraphGame g;
    for (unsigned i = 1; i <= n; ++i) {
        g.add_vertex("b" + std::to_string(i), Color::Blue);
        g.add_vertex("r" + std::to_string(i), Color::Red);
        g.add_edge(2 * (i - 1), 2 * (i - 1) + 1);
    }
    for (std::size_t u = 0; u < 2 * std::size_t{n}; ++u)
        for (std::size_t v = (u / 2 + 1) * 2; v < 2 * std::size_t{n}; ++v) g.add_arc(u, v);
    return g;
}

const char* to_string(SynthesisRule rule)
{
    switch (rule) {
    case SynthesisRule::Integer: return "integer";
    case SynthesisRule::Stalk: return "stalk";
    case SynthesisRule::Gadget: return "gadget";
    case SynthesisRule::Translate: return "translate";
    case SynthesisRule::Negate: return "negate";
    }
    return "?";
}

SynthesisResult synthesize_traced(Game x) { return Synthesizer().run(x); }

DigraphGame synthesize(Game x) { return synthesize_traced(x).digraph; }

}  // namespace diplace
