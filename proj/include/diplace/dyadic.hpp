#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace diplace {

/// A dyadic rational numerator / 2^exponent, always stored reduced
/// (numerator odd, or exponent zero).
class Dyadic {
public:
    constexpr Dyadic() = default;
    constexpr Dyadic(std::int64_t integer) : num_(integer), exp_(0) {}  // NOLINT(implicit)
    Dyadic(std::int64_t numerator, unsigned exponent);

    std::int64_t numerator() const { return num_; }
    unsigned exponent() const { return exp_; }
    bool is_integer() const { return exp_ == 0; }

    /// Largest integer <= value.
    std::int64_t floor() const;
    std::int64_t ceil() const;

    Dyadic operator-() const { return Dyadic(-num_, exp_); }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

    /// "3", "-1/2", "5/8".
    std::string to_string() const;

    /// The simplest dyadic strictly between lo and hi (absent bound = unbounded).
    /// Integers are preferred, closest to zero first; otherwise the smallest
    /// exponent. Requires lo < hi when both are present.
    static Dyadic simplest_between(const std::optional<Dyadic>& lo,
                                   const std::optional<Dyadic>& hi);

private:
    std::int64_t num_ = 0;
    unsigned exp_ = 0;
};

}  // namespace diplace
