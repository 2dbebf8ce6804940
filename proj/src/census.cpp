#include "diplace/census.hpp"

#include <algorithm>
#include <thread>

#include "diplace/expr.hpp"
#include "diplace/io.hpp"
#include "json.hpp"

namespace diplace {

namespace {

// Code of an n-vertex digraph: bit i (i < n) set when vertex i is red, then
// one bit per ordered pair (u, v), u != v, in row-major order.
struct Layout {
    unsigned n;
    unsigned arcs;
    unsigned pair[kCensusHardCap][kCensusHardCap];

    explicit Layout(unsigned order) : n(order), arcs(order * (order ? order - 1 : 0))
    {
        unsigned k = 0;
        for (unsigned u = 0; u < n; ++u)
            for (unsigned v = 0; v < n; ++v)
                if (u != v) pair[u][v] = n + k++;
    }
    std::uint64_t size() const { return std::uint64_t{1} << (n + arcs); }
};

struct Partial {
    std::uint64_t count = 0;
    std::uint64_t best_key = ~std::uint64_t{0};
    std::uint64_t best_code = 0;
};

using Level = std::vector<std::uint32_t>;
using Tally = std::map<Game, Partial>;

// Lexicographic order on (colour string, arc bitstring): vertex 0 and pair 0
// are most significant.
std::uint64_t lex_key(const Layout& L, std::uint64_t code)
{
    std::uint64_t key = 0;
    for (unsigned b = 0; b < L.n + L.arcs; ++b) key = key << 1 | (code >> b & 1);
    return key;
}

std::uint64_t induced_code(const Layout& L, const Layout& sub, std::uint64_t code, unsigned alive)
{
    unsigned keep[kCensusHardCap];
    unsigned k = 0;
    for (unsigned v = 0; v < L.n; ++v)
        if (alive >> v & 1) keep[k++] = v;
    std::uint64_t out = 0;
    for (unsigned i = 0; i < k; ++i) out |= (code >> keep[i] & 1) << i;
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            if (i != j) out |= (code >> L.pair[keep[i]][keep[j]] & 1) << sub.pair[i][j];
    return out;
}

void evaluate_range(const Layout& L, const std::vector<Layout>& layouts, const std::vector<Level>& tables,
                    Level& out, std::uint64_t begin, std::uint64_t end, Tally& tally)
{
    const unsigned all = (1u << L.n) - 1;
    std::vector<Game> lefts, rights;
    for (std::uint64_t code = begin; code < end; ++code) {
        lefts.clear();
        rights.clear();
        for (unsigned v = 0; v < L.n; ++v) {
            unsigned removed = 1u << v;
            for (unsigned w = 0; w < L.n; ++w)
                if (w != v && (code >> L.pair[v][w] & 1)) removed |= 1u << w;
            const unsigned alive = all & ~removed;
            const unsigned k = static_cast<unsigned>(__builtin_popcount(alive));
            const Game option = Game::from_id(tables[k][induced_code(L, layouts[k], code, alive)]);
            (code >> v & 1 ? rights : lefts).push_back(option);
        }
        const Game g = canonical(make_game(lefts, rights));
        out[code] = g.id();
        Partial& p = tally[g];
        ++p.count;
        const std::uint64_t key = lex_key(L, code);
        if (key < p.best_key) {
            p.best_key = key;
            p.best_code = code;
        }
    }
}

DigraphGame decode(const Layout& L, std::uint64_t code)
{
    DigraphGame g;
    for (unsigned v = 0; v < L.n; ++v) g.add_vertex("v" + std::to_string(v + 1), code >> v & 1 ? Color::Red : Color::Blue);
    for (unsigned u = 0; u < L.n; ++u)
        for (unsigned v = 0; v < L.n; ++v)
            if (u != v && (code >> L.pair[u][v] & 1)) g.add_arc(u, v);
    return g;
}

void merge(Tally& into, const Tally& from)
{
    for (const auto& [g, p] : from) {
        Partial& q = into[g];
        q.count += p.count;
        if (p.best_key < q.best_key) {
            q.best_key = p.best_key;
            q.best_code = p.best_code;
        }
    }
}

}  // namespace

std::uint64_t labeled_digraph_count(unsigned n) { return Layout(n).size(); }

Census enumerate(unsigned max_n, unsigned workers, bool allow_five)
{
    if (max_n > kCensusHardCap) throw CapExceeded("census is capped at 5 vertices");
    if (max_n == kCensusHardCap && !allow_five) throw CapExceeded("a 5-vertex census must be requested explicitly");
    workers = std::max(1u, workers);

    Census census;
    census.max_n = max_n;
    std::vector<Layout> layouts;
    std::vector<Level> tables;
    for (unsigned n = 0; n <= max_n; ++n) {
        layouts.emplace_back(n);
        const Layout& L = layouts.back();
        tables.emplace_back(L.size());
        Level& out = tables.back();

        std::vector<Tally> partial(workers);
        const std::uint64_t total = L.size();
        const std::uint64_t chunk = (total + workers - 1) / workers;
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) {
            const std::uint64_t begin = std::min(total, w * chunk), end = std::min(total, (w + 1) * chunk);
            pool.emplace_back([&, begin, end, w] { evaluate_range(L, layouts, tables, out, begin, end, partial[w]); });
        }
        evaluate_range(L, layouts, tables, out, 0, std::min(total, chunk), partial[0]);
        for (auto& t : pool) t.join();
        Tally tally;
        for (const auto& p : partial) merge(tally, p);

        census.graphs_visited += total;
        for (const auto& [g, p] : tally) {
            auto it = census.records.find(g);
            if (it == census.records.end())
                census.records.emplace(g, CensusRecord{g, bracket_encoding(g), n, decode(L, p.best_code), p.count});
            else
                it->second.occurrences += p.count;
        }
        census.distinct_up_to.push_back(census.records.size());
    }
    return census;
}

std::optional<unsigned> f_of(Game x, const Census& census)
{
    auto it = census.records.find(canonical(x));
    if (it == census.records.end()) return std::nullopt;
    return it->second.min_vertices;
}

std::vector<Game> values_born_by(unsigned day)
{
    if (day > 2) throw std::invalid_argument("value sets are generated up to day 2");
    std::vector<Game> values{zero()};
    for (unsigned d = 0; d < day; ++d) {
        std::vector<Game> next;
        const std::size_t n = values.size();
        for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) {
            for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
                std::vector<Game> l, r;
                for (std::size_t i = 0; i < n; ++i) {
                    if (a >> i & 1) l.push_back(values[i]);
                    if (b >> i & 1) r.push_back(values[i]);
                }
                const Game c = canonical(make_game(l, r));
                if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
            }
        }
        values = std::move(next);
    }
    return values;
}

unsigned big_F(unsigned b, const Census& census)
{
    if (b > 2) throw IncompleteCensus("the values born by day " + std::to_string(b) + " are not enumerated");
    unsigned best = 0;
    for (Game x : values_born_by(b)) {
        auto f = f_of(x, census);
        if (!f) throw IncompleteCensus("value " + pretty(x) + " is not realized within the census cap");
        best = std::max(best, *f);
    }
    return best;
}

std::vector<Game> birthday_three_candidates()
{
    const std::vector<Game> day2 = values_born_by(2);
    std::vector<Game> out;
    auto consider = [&out](Game g) {
        g = canonical(g);
        if (birthday(g) == 3 && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    };
    for (Game a : day2) {
        consider(make_game({a}, {}));
        consider(make_game({}, {a}));
        for (Game b : day2) consider(make_game({a}, {b}));
    }
    return out;
}

std::optional<Game> missing_birthday_three(const Census& census)
{
    for (Game g : birthday_three_candidates())
        if (!census.records.count(g)) return g;
    return std::nullopt;
}

std::string census_json(const Census& census)
{
    using nlohmann::json;
    std::vector<const CensusRecord*> sorted;
    for (const auto& [g, r] : census.records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const CensusRecord* a, const CensusRecord* b) {
        return std::tie(a->min_vertices, a->value_key) < std::tie(b->min_vertices, b->value_key);
    });
    json doc;
    doc["max_n"] = census.max_n;
    doc["graphs"] = census.graphs_visited;
    doc["values"] = json::array();
    for (const CensusRecord* r : sorted) {
        doc["values"].push_back({{"value", r->value_key},
                                 {"pretty", pretty(r->value)},
                                 {"min_vertices", r->min_vertices},
                                 {"witness", json::parse(emit_digraph_json(r->witness, -1))},
                                 {"count", r->occurrences}});
    }
    return doc.dump(1) + "\n";
}

}  // namespace diplace
