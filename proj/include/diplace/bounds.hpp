#pragma once

// Growth bounds on f and F.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace diplace {

using BigInt = boost::multiprecision::cpp_int;

/// An exact integer, or only its base-2 logarithm when too large to hold.
class BigBound {
public:
    BigBound() = default;
    BigBound(BigInt exact);  // NOLINT(implicit)
    static BigBound from_log2(long double log2);

    bool is_exact() const { return exact_.has_value(); }
    const std::optional<BigInt>& exact() const { return exact_; }
    long double log2() const { return log2_; }

    /// Digits when exact and short, otherwise "1.08e189" style.
    std::string to_string() const;

    friend bool operator==(const BigBound& a, const BigBound& b);
    friend std::partial_ordering operator<=>(const BigBound& a, const BigBound& b);

private:
    std::optional<BigInt> exact_;
    long double log2_ = 0;  // -inf for zero
};

/// r[n] = r^(r^(n-1)), the tower grouped from the bottom: ((r^r)^r)^...
/// with n copies of r; r[0] = 1.
BigBound power_tower(unsigned r, unsigned n);

/// F(b+1) <= 2 a(b) (F(b) + b + 1) + 5b + 8.
BigInt bound_lemma51(const BigInt& a_b, const BigInt& F_b, unsigned b);
/// F(b) >= 2[b-1] for b >= 2.
BigBound bound_thm54(unsigned b);
/// At most n 2^(n^2) distinct values on n vertices.
BigBound bound_lemma53(unsigned n);
/// F(b) < g(b+1)/2 - b, rounded up to an integer.
BigBound bound_thm57(const BigBound& g_next, unsigned b);

struct ReferenceRow {
    unsigned b;
    BigInt a;  // largest antichain of values born by day b
    BigInt g;  // number of values born by day b
    bool exact;  // false: a and g are upper bounds only
};

const std::vector<ReferenceRow>& reference_table();

struct ExtremalRow {
    unsigned b;
    BigBound lower;
    BigBound upper;
    bool upper_from_bounded_input;  // built on an a(b) known only as a bound
};

/// F(b) bounds for b = 0..5: exact for b <= 2, then the recursive upper bound and
/// the tower below. `f3_lower` is the F(3) lower bound (5).
std::vector<ExtremalRow> extremal_table(unsigned f3_lower = 5);

}  // namespace diplace
