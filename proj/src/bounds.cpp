#include "diplace/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace diplace {

namespace {

constexpr long double kExactLimitBits = 4096;

long double log2_of(const BigInt& x)
{
    if (x <= 0) return -std::numeric_limits<long double>::infinity();
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x));
    if (bits < 60) return std::log2(static_cast<long double>(x.convert_to<unsigned long long>()));
    const BigInt top = x >> (bits - 59);
    return std::log2(static_cast<long double>(top.convert_to<unsigned long long>())) + (bits - 59);
}

BigInt pow2(unsigned long long e) { return BigInt(1) << e; }

}  // namespace

BigBound::BigBound(BigInt exact) : exact_(std::move(exact)), log2_(log2_of(*exact_)) {}

BigBound BigBound::from_log2(long double log2)
{
    BigBound b;
    b.log2_ = log2;
    return b;
}

std::string BigBound::to_string() const
{
    if (exact_ && *exact_ < BigInt("1000000000000000000000000")) return exact_->str();
    if (std::isinf(log2_)) return "inf";
    const long double log10 = log2_ * std::log10(2.0L);
    if (log10 > 1e15L) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "2^%.6Lg", log2_);
        return buf;
    }
    long double exponent = std::floor(log10);
    long double mantissa = std::pow(10.0L, log10 - exponent);
    if (mantissa >= 9.995L) {
        mantissa /= 10;
        exponent += 1;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2Lfe%.0Lf", mantissa, exponent);
    return buf;
}

bool operator==(const BigBound& a, const BigBound& b)
{
    if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
    return a.log2_ == b.log2_;
}

std::partial_ordering operator<=>(const BigBound& a, const BigBound& b)
{
    if (a.exact_ && b.exact_) {
        if (*a.exact_ < *b.exact_) return std::partial_ordering::less;
        if (*a.exact_ > *b.exact_) return std::partial_ordering::greater;
        return std::partial_ordering::equivalent;
    }
    return a.log2_ <=> b.log2_;
}

BigBound power_tower(unsigned r, unsigned n)
{
    if (n == 0) return BigInt(1);
    // exponent r^(n-1), held as log2
    const long double exponent_log2 = (n - 1) * std::log2(static_cast<long double>(r));
    const long double log2 = std::exp2(exponent_log2) * std::log2(static_cast<long double>(r));
    if (log2 > kExactLimitBits) return BigBound::from_log2(log2);
    BigInt exponent = 1;
    for (unsigned i = 1; i < n; ++i) exponent *= r;
    return BigBound(boost::multiprecision::pow(BigInt(r), exponent.convert_to<unsigned>()));
}

BigInt bound_lemma51(const BigInt& a_b, const BigInt& F_b, unsigned b)
{
    return 2 * a_b * (F_b + b + 1) + 5 * BigInt(b) + 8;
}

BigBound bound_thm54(unsigned b)
{
    if (b == 0) return BigInt(0);
    return power_tower(2, b - 1);
}

BigBound bound_lemma53(unsigned n)
{
    const long double log2 = (n ? std::log2(static_cast<long double>(n)) : 0) + static_cast<long double>(n) * n;
    if (n == 0) return BigInt(0);
    if (log2 > kExactLimitBits) return BigBound::from_log2(log2);
    return BigBound(BigInt(n) * pow2(static_cast<unsigned long long>(n) * n));
}

BigBound bound_thm57(const BigBound& g_next, unsigned b)
{
    if (!g_next.is_exact()) return BigBound::from_log2(g_next.log2() - 1);
    const BigInt& g = *g_next.exact();
    return BigBound((g + 1) / 2 - b);
}

const std::vector<ReferenceRow>& reference_table()
{
    static const std::vector<ReferenceRow> rows = [] {
        const BigInt big = 4 * boost::multiprecision::pow(BigInt(10), 184);
        return std::vector<ReferenceRow>{
            {0, 1, 1, true}, {1, 2, 4, true}, {2, 4, 22, true}, {3, 86, 1474, true}, {4, big, big, false}};
    }();
    return rows;
}

std::vector<ExtremalRow> extremal_table(unsigned f3_lower)
{
    const auto& ref = reference_table();
    std::vector<ExtremalRow> rows{
        {0, BigInt(0), BigInt(0), false}, {1, BigInt(2), BigInt(2), false}, {2, BigInt(4), BigInt(4), false}};
    BigInt upper = 4;
    bool bounded = false;
    for (unsigned b = 3; b <= 5; ++b) {
        const ReferenceRow& prev = ref[b - 1];
        upper = bound_lemma51(prev.a, upper, b - 1);
        bounded = bounded || !prev.exact;
        const BigBound lower = b == 3 ? BigBound(BigInt(f3_lower)) : bound_thm54(b);
        rows.push_back({b, lower, upper, bounded});
    }
    return rows;
}

}  // namespace diplace
