#pragma once

// Sharded memo table: concurrent readers, serialized insertion per shard.

#include <array>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace diplace::detail {

template <class Key, class Value, std::size_t Shards = 32>
class ShardedMemo {
public:
    std::optional<Value> find(const Key& key) const
    {
        const Shard& s = shard(key);
        std::shared_lock lock(s.mutex);
        auto it = s.map.find(key);
        if (it == s.map.end()) return std::nullopt;
        return it->second;
    }

    void insert(const Key& key, const Value& value)
    {
        Shard& s = shard(key);
        std::unique_lock lock(s.mutex);
        s.map.emplace(key, value);
    }

    std::size_t size() const
    {
        std::size_t total = 0;
        for (const Shard& s : shards_) {
            std::shared_lock lock(s.mutex);
            total += s.map.size();
        }
        return total;
    }

private:
    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<Key, Value> map;
    };

    Shard& shard(const Key& key) { return shards_[std::hash<Key>{}(key) % Shards]; }
    const Shard& shard(const Key& key) const { return shards_[std::hash<Key>{}(key) % Shards]; }

    std::array<Shard, Shards> shards_;
};

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b)
{
    return (std::uint64_t{a} << 32) | b;
}

inline std::uint64_t unordered_pair_key(std::uint32_t a, std::uint32_t b)
{
    return a < b ? pair_key(a, b) : pair_key(b, a);
}

}  // namespace diplace::detail
