#pragma once

// Fixed-width bitmask evaluation engine behind PositionEvaluator.

#include <array>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "diplace/digraph.hpp"

namespace diplace::detail {

template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return w[i / 64] >> (i % 64) & 1; }
    bool none() const
    {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    std::size_t lowest() const
    {
        for (std::size_t i = 0; i < W; ++i)
            if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
        return W * 64;
    }
    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t i = 0; i < W; ++i)
            for (std::uint64_t b = w[i]; b; b &= b - 1) fn(i * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    }

    friend Bits operator&(Bits a, const Bits& b)
    {
        for (std::size_t i = 0; i < W; ++i) a.w[i] &= b.w[i];
        return a;
    }
    friend Bits operator|(Bits a, const Bits& b)
    {
        for (std::size_t i = 0; i < W; ++i) a.w[i] |= b.w[i];
        return a;
    }
    /// a minus b
    friend Bits operator-(Bits a, const Bits& b)
    {
        for (std::size_t i = 0; i < W; ++i) a.w[i] &= ~b.w[i];
        return a;
    }
    friend bool operator==(const Bits&, const Bits&) = default;

    static Bits from(const VertexSet& s)
    {
        Bits b;
        for (std::size_t i = 0; i < s.words().size() && i < W; ++i) b.w[i] = s.words()[i];
        return b;
    }
};

template <std::size_t W>
struct BitsHash {
    std::size_t operator()(const Bits<W>& b) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto x : b.w) {
            h ^= x;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

template <std::size_t W>
class Engine {
public:
    using Mask = Bits<W>;

    explicit Engine(const DigraphGame& g);

    Game value(Bits<W> alive);
    Game literal(Bits<W> alive);

    std::size_t memo_entries() const;
    std::size_t twin_classes() const { return classes_.size(); }

private:
    struct TwinClass {
        Bits<W> members;
        std::vector<Bits<W>> prefix;  // prefix[k] = first k members
    };

    Bits<W> compact(Bits<W> mask) const;
    std::vector<Bits<W>> split(Bits<W> mask) const;
    Game component_value(Bits<W> key);

    bool flat() const { return W == 1 && n_ <= kFlatLimit; }
    void enforce_limit();

    static constexpr std::size_t kFlatLimit = 20;
    static constexpr std::uint32_t kUnset = 0xffffffffu;

    std::size_t n_;
    std::vector<Bits<W>> closed_out_;
    std::vector<Bits<W>> neighbours_;  // in or out, self excluded
    Bits<W> blue_, red_, movers_;
    std::vector<TwinClass> classes_;
    std::size_t max_entries_;

    std::unordered_map<Bits<W>, Game, BitsHash<W>> value_memo_, literal_memo_;
    std::vector<std::uint32_t> flat_value_, flat_literal_;
};

}  // namespace diplace::detail
