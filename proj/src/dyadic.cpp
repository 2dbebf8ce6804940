#include "diplace/dyadic.hpp"

#include <stdexcept>

namespace diplace {

namespace {

constexpr unsigned kMaxExponent = 60;

std::int64_t scaled(const Dyadic& d, unsigned exponent)
{
    return d.numerator() * (std::int64_t{1} << (exponent - d.exponent()));
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, unsigned exponent) : num_(numerator), exp_(exponent)
{
    if (exp_ > kMaxExponent) throw std::overflow_error("dyadic exponent too large");
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && (num_ % 2) == 0) {
        num_ /= 2;
        --exp_;
    }
}

std::int64_t Dyadic::floor() const
{
    if (exp_ == 0) return num_;
    // arithmetic shift rounds toward negative infinity
    return num_ >> exp_;
}

std::int64_t Dyadic::ceil() const
{
    if (exp_ == 0) return num_;
    return floor() + 1;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    const unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic(scaled(a, e) + scaled(b, e), e);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b)
{
    const unsigned e = std::max(a.exp_, b.exp_);
    return scaled(a, e) <=> scaled(b, e);
}

std::string Dyadic::to_string() const
{
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic Dyadic::simplest_between(const std::optional<Dyadic>& lo, const std::optional<Dyadic>& hi)
{
    if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("simplest_between: empty interval");
    // integer candidates first
    if ((!lo || *lo < Dyadic(0)) && (!hi || Dyadic(0) < *hi)) return Dyadic(0);
    if (!hi || (lo && Dyadic(0) <= *lo)) {
        Dyadic candidate(lo->floor() + 1);
        if (!hi || candidate < *hi) return candidate;
    } else {
        Dyadic candidate(hi->ceil() - 1);
        if (!lo || *lo < candidate) return candidate;
    }
    // both bounds lie within one unit interval
    for (unsigned e = 1; e <= kMaxExponent; ++e) {
        const std::int64_t lo_scaled = scaled(*lo, std::max(e, lo->exponent())) >>
                                       (std::max(e, lo->exponent()) - e);
        Dyadic candidate(lo_scaled + 1, e);
        if (*lo < candidate && candidate < *hi) return candidate;
    }
    throw std::overflow_error("simplest_between: precision exhausted");
}

}  // namespace diplace
