#pragma once

// Exhaustive census of small digraph placement games.
//
// Every 2-coloured labeled digraph on up to max_n vertices is evaluated;
// for each value the census keeps the least vertex count f(X) together with
// a witness and the number of digraphs realizing it.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diplace/digraph.hpp"
#include "diplace/game.hpp"

namespace diplace {

class CapExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IncompleteCensus : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CensusRecord {
    Game value;
    std::string value_key;  // bracket encoding
    unsigned min_vertices;
    DigraphGame witness;
    std::uint64_t occurrences;
};

struct Census {
    unsigned max_n = 0;
    std::uint64_t graphs_visited = 0;
    std::map<Game, CensusRecord> records;
    /// distinct values realized with at most n vertices, n = 0..max_n
    std::vector<std::size_t> distinct_up_to;
};

constexpr unsigned kCensusHardCap = 5;

/// 2^(n(n-1)) arc sets times 2^n colourings.
std::uint64_t labeled_digraph_count(unsigned n);

/// Throws CapExceeded when max_n > 5, or max_n == 5 without allow_five.
/// The witness of each value is the least (colour string, arc bitstring)
/// among digraphs of minimum order; results do not depend on `workers`.
Census enumerate(unsigned max_n, unsigned workers = 1, bool allow_five = false);

/// f(x) when x is realized within the census cap.
std::optional<unsigned> f_of(Game x, const Census& census);

/// Canonical values born by the given day (day <= 2).
std::vector<Game> values_born_by(unsigned day);

/// max f over values_born_by(b). Throws IncompleteCensus if one is missing.
unsigned big_F(unsigned b, const Census& census);

/// Canonical birthday-3 values {a|b}, {a|}, {|b} over day-2 values a, b.
std::vector<Game> birthday_three_candidates();
/// First candidate absent from the census, if any.
std::optional<Game> missing_birthday_three(const Census& census);

/// {"max_n", "graphs", "values": [{value, pretty, min_vertices, witness, count}]}
std::string census_json(const Census& census);

}  // namespace diplace
