#include "diplace/game.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "memo.hpp"

namespace diplace {

namespace {

struct Node {
    std::vector<Game> left;
    std::vector<Game> right;
};

// Append-only node storage. Nodes never move once written, so spans over
// their option vectors stay valid for the life of the process.
class NodeStore {
public:
    NodeStore()
    {
        for (auto& c : chunks_) c.store(nullptr, std::memory_order_relaxed);
        intern({}, {});  // id 0 is the game 0
    }

    const Node& node(std::uint32_t id) const
    {
        Node* chunk = chunks_[id >> kChunkBits].load(std::memory_order_acquire);
        return chunk[id & (kChunkSize - 1)];
    }

    Game intern(std::vector<Game> left, std::vector<Game> right)
    {
        normalize(left);
        normalize(right);
        const std::uint64_t h = hash(left, right);
        Shard& shard = shards_[h % kShards];
        {
            std::shared_lock lock(shard.mutex);
            if (auto found = lookup(shard, h, left, right)) return *found;
        }
        std::unique_lock lock(shard.mutex);
        if (auto found = lookup(shard, h, left, right)) return *found;
        const std::uint32_t id = next_.fetch_add(1, std::memory_order_relaxed);
        Node& slot = writable(id);
        slot.left = std::move(left);
        slot.right = std::move(right);
        shard.by_hash[h].push_back(id);
        return Game::from_id(id);
    }

    std::size_t size() const { return next_.load(std::memory_order_relaxed); }

private:
    static constexpr unsigned kChunkBits = 16;
    static constexpr std::uint32_t kChunkSize = 1u << kChunkBits;
    static constexpr std::size_t kMaxChunks = 1u << 16;
    static constexpr std::size_t kShards = 64;

    struct Shard {
        std::shared_mutex mutex;
        std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash;
    };

    static void normalize(std::vector<Game>& options)
    {
        std::sort(options.begin(), options.end());
        options.erase(std::unique(options.begin(), options.end()), options.end());
    }

    static std::uint64_t hash(const std::vector<Game>& left, const std::vector<Game>& right)
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (Game g : left) mix(g.id());
        mix(0xffffffffull);
        for (Game g : right) mix(g.id());
        return h;
    }

    std::optional<Game> lookup(const Shard& shard, std::uint64_t h, const std::vector<Game>& left,
                               const std::vector<Game>& right) const
    {
        auto it = shard.by_hash.find(h);
        if (it == shard.by_hash.end()) return std::nullopt;
        for (std::uint32_t id : it->second) {
            const Node& n = node(id);
            if (n.left == left && n.right == right) return Game::from_id(id);
        }
        return std::nullopt;
    }

    Node& writable(std::uint32_t id)
    {
        const std::size_t c = id >> kChunkBits;
        if (c >= kMaxChunks) throw std::length_error("game intern table exhausted");
        Node* chunk = chunks_[c].load(std::memory_order_acquire);
        if (chunk == nullptr) {
            std::lock_guard lock(grow_mutex_);
            chunk = chunks_[c].load(std::memory_order_acquire);
            if (chunk == nullptr) {
                chunk = new Node[kChunkSize];
                chunks_[c].store(chunk, std::memory_order_release);
            }
        }
        return chunk[id & (kChunkSize - 1)];
    }

    std::array<std::atomic<Node*>, kMaxChunks> chunks_;
    std::mutex grow_mutex_;
    std::atomic<std::uint32_t> next_{0};
    std::array<Shard, kShards> shards_;
};

// Never destroyed: handles may be used from static destructors elsewhere.
NodeStore& store()
{
    static NodeStore* s = new NodeStore();
    return *s;
}

struct Memos {
    detail::ShardedMemo<std::uint32_t, Game> negate;
    detail::ShardedMemo<std::uint64_t, Game> sum;
    detail::ShardedMemo<std::uint64_t, Game> add;
    detail::ShardedMemo<std::uint64_t, bool> leq;
    detail::ShardedMemo<std::uint32_t, bool> left_first;
    detail::ShardedMemo<std::uint32_t, bool> right_first;
    detail::ShardedMemo<std::uint32_t, Game> canonical;
    detail::ShardedMemo<std::uint32_t, unsigned> birthday;
    detail::ShardedMemo<std::uint32_t, std::optional<Dyadic>> number;
    detail::ShardedMemo<std::uint32_t, std::shared_ptr<const std::string>> bracket;
};

Memos& memos()
{
    static Memos* m = new Memos();
    return *m;
}

std::vector<Game> map_options(std::span<const Game> options, auto&& fn)
{
    std::vector<Game> out;
    out.reserve(options.size());
    for (Game g : options) out.push_back(fn(g));
    return out;
}

void sort_unique(std::vector<Game>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Drops dominated options. For Left an option is dominated by a greater or
// equal one; among equal options the smallest id survives.
void remove_dominated(std::vector<Game>& options, bool left_side)
{
    std::vector<Game> kept;
    for (Game a : options) {
        bool dominated = false;
        for (Game b : options) {
            if (a == b) continue;
            const bool a_worse = left_side ? leq(a, b) : leq(b, a);
            if (!a_worse) continue;
            const bool b_worse = left_side ? leq(b, a) : leq(a, b);
            if (!b_worse || b.id() < a.id()) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(a);
    }
    options = std::move(kept);
}

// Reversible-option bypass against the current form. Returns true if any
// option was replaced.
bool bypass_reversible(std::vector<Game>& options, bool left_side, Game current)
{
    std::vector<Game> out;
    bool changed = false;
    for (Game opt : options) {
        std::optional<Game> reverser;
        if (left_side) {
            for (Game rr : opt.right()) {
                if (leq(rr, current)) {
                    reverser = rr;
                    break;
                }
            }
        } else {
            for (Game rl : opt.left()) {
                if (leq(current, rl)) {
                    reverser = rl;
                    break;
                }
            }
        }
        if (!reverser) {
            out.push_back(opt);
            continue;
        }
        changed = true;
        auto replacement = left_side ? reverser->left() : reverser->right();
        out.insert(out.end(), replacement.begin(), replacement.end());
    }
    sort_unique(out);
    options = std::move(out);
    return changed;
}

std::optional<Dyadic> number_of_form(Game g)
{
    if (auto hit = memos().number.find(g.id())) return *hit;
    std::optional<Dyadic> lo, hi;
    bool ok = true;
    for (Game l : g.left()) {
        auto v = number_of_form(l);
        if (!v) {
            ok = false;
            break;
        }
        if (!lo || *lo < *v) lo = v;
    }
    if (ok) {
        for (Game r : g.right()) {
            auto v = number_of_form(r);
            if (!v) {
                ok = false;
                break;
            }
            if (!hi || *v < *hi) hi = v;
        }
    }
    std::optional<Dyadic> result;
    if (ok && (!lo || !hi || *lo < *hi)) result = Dyadic::simplest_between(lo, hi);
    memos().number.insert(g.id(), result);
    return result;
}

}  // namespace

std::span<const Game> Game::left() const { return store().node(id_).left; }
std::span<const Game> Game::right() const { return store().node(id_).right; }

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::LeftWin: return "L";
    case Outcome::RightWin: return "R";
    case Outcome::NextWin: return "N";
    case Outcome::PreviousWin: return "P";
    }
    return "?";
}

const char* to_string(Relation r)
{
    switch (r) {
    case Relation::Less: return "<";
    case Relation::Greater: return ">";
    case Relation::Equal: return "=";
    case Relation::Confused: return "||";
    }
    return "?";
}

Game make_game(std::vector<Game> lefts, std::vector<Game> rights)
{
    return store().intern(std::move(lefts), std::move(rights));
}

std::size_t interned_count() { return store().size(); }

Game star() { return make_game({zero()}, {zero()}); }
Game up() { return make_game({zero()}, {star()}); }
Game down() { return make_game({star()}, {zero()}); }

Game nimber(unsigned n)
{
    std::vector<Game> opts;
    for (unsigned i = 0; i < n; ++i) opts.push_back(nimber(i));
    return make_game(opts, opts);
}

Game negate(Game g)
{
    if (g == zero()) return g;
    if (auto hit = memos().negate.find(g.id())) return *hit;
    Game result = make_game(map_options(g.right(), negate), map_options(g.left(), negate));
    memos().negate.insert(g.id(), result);
    memos().negate.insert(result.id(), g);
    return result;
}

Game sum(Game g, Game h)
{
    if (g == zero()) return h;
    if (h == zero()) return g;
    const auto key = detail::unordered_pair_key(g.id(), h.id());
    if (auto hit = memos().sum.find(key)) return *hit;
    std::vector<Game> lefts, rights;
    for (Game gl : g.left()) lefts.push_back(sum(gl, h));
    for (Game hl : h.left()) lefts.push_back(sum(g, hl));
    for (Game gr : g.right()) rights.push_back(sum(gr, h));
    for (Game hr : h.right()) rights.push_back(sum(g, hr));
    Game result = make_game(std::move(lefts), std::move(rights));
    memos().sum.insert(key, result);
    return result;
}

bool leq(Game g, Game h)
{
    if (g == h) return true;
    const auto key = detail::pair_key(g.id(), h.id());
    if (auto hit = memos().leq.find(key)) return *hit;
    bool result = true;
    for (Game gl : g.left()) {
        if (leq(h, gl)) {
            result = false;
            break;
        }
    }
    if (result) {
        for (Game hr : h.right()) {
            if (leq(hr, g)) {
                result = false;
                break;
            }
        }
    }
    memos().leq.insert(key, result);
    return result;
}

Relation compare(Game g, Game h)
{
    const bool le = leq(g, h);
    const bool ge = leq(h, g);
    if (le && ge) return Relation::Equal;
    if (le) return Relation::Less;
    if (ge) return Relation::Greater;
    return Relation::Confused;
}

bool left_wins_moving_first(Game g)
{
    if (auto hit = memos().left_first.find(g.id())) return *hit;
    bool result = false;
    for (Game gl : g.left()) {
        if (!right_wins_moving_first(gl)) {
            result = true;
            break;
        }
    }
    memos().left_first.insert(g.id(), result);
    return result;
}

bool right_wins_moving_first(Game g)
{
    if (auto hit = memos().right_first.find(g.id())) return *hit;
    bool result = false;
    for (Game gr : g.right()) {
        if (!left_wins_moving_first(gr)) {
            result = true;
            break;
        }
    }
    memos().right_first.insert(g.id(), result);
    return result;
}

Outcome outcome(Game g)
{
    const bool l = left_wins_moving_first(g);
    const bool r = right_wins_moving_first(g);
    if (l && r) return Outcome::NextWin;
    if (l) return Outcome::LeftWin;
    if (r) return Outcome::RightWin;
    return Outcome::PreviousWin;
}

Game canonical(Game g)
{
    if (auto hit = memos().canonical.find(g.id())) return *hit;
    std::vector<Game> lefts = map_options(g.left(), canonical);
    std::vector<Game> rights = map_options(g.right(), canonical);
    sort_unique(lefts);
    sort_unique(rights);
    for (;;) {
        remove_dominated(lefts, true);
        remove_dominated(rights, false);
        const Game current = make_game(lefts, rights);
        const bool l_changed = bypass_reversible(lefts, true, current);
        const bool r_changed = bypass_reversible(rights, false, current);
        if (!l_changed && !r_changed) break;
    }
    Game result = make_game(std::move(lefts), std::move(rights));
    memos().canonical.insert(g.id(), result);
    memos().canonical.insert(result.id(), result);
    return result;
}

bool is_canonical(Game g) { return canonical(g) == g; }

unsigned birthday(Game g)
{
    if (g == zero()) return 0;
    if (auto hit = memos().birthday.find(g.id())) return *hit;
    unsigned best = 0;
    for (Game o : g.left()) best = std::max(best, birthday(o));
    for (Game o : g.right()) best = std::max(best, birthday(o));
    memos().birthday.insert(g.id(), best + 1);
    return best + 1;
}

std::optional<Dyadic> as_number(Game g) { return number_of_form(canonical(g)); }

Game number_game(const Dyadic& x)
{
    Game result;
    if (x.is_integer()) {
        const std::int64_t n = x.numerator();
        if (n == 0) return zero();
        // built bottom-up to avoid deep recursion on large integers
        result = zero();
        for (std::int64_t i = 0; i < (n > 0 ? n : -n); ++i) {
            result = n > 0 ? make_game({result}, {}) : make_game({}, {result});
            memos().canonical.insert(result.id(), result);
        }
        return result;
    }
    const Dyadic step(1, x.exponent());
    result = make_game({number_game(x - step)}, {number_game(x + step)});
    memos().canonical.insert(result.id(), result);
    return result;
}

Game add(Game g, Game h)
{
    g = canonical(g);
    h = canonical(h);
    if (g == zero()) return h;
    if (h == zero()) return g;
    const auto key = detail::unordered_pair_key(g.id(), h.id());
    if (auto hit = memos().add.find(key)) return *hit;

    const auto gx = number_of_form(g);
    const auto hx = number_of_form(h);
    Game result;
    if (gx && hx) {
        result = number_game(*gx + *hx);
    } else if (gx || hx) {
        // number translation: moving in the number part is never better
        const Game other = gx ? h : g;
        const Game number = gx ? g : h;
        std::vector<Game> lefts, rights;
        for (Game o : other.left()) lefts.push_back(add(o, number));
        for (Game o : other.right()) rights.push_back(add(o, number));
        result = canonical(make_game(std::move(lefts), std::move(rights)));
    } else {
        std::vector<Game> lefts, rights;
        for (Game o : g.left()) lefts.push_back(add(o, h));
        for (Game o : h.left()) lefts.push_back(add(g, o));
        for (Game o : g.right()) rights.push_back(add(o, h));
        for (Game o : h.right()) rights.push_back(add(g, o));
        result = canonical(make_game(std::move(lefts), std::move(rights)));
    }
    memos().add.insert(key, result);
    return result;
}

Game add_all(std::span<const Game> games)
{
    Game total = zero();
    for (Game g : games) total = add(total, g);
    return total;
}

Game translate(Game g, const Dyadic& x) { return add(g, number_game(x)); }

Game translate_optionwise(Game g, const Dyadic& x)
{
    g = canonical(g);
    auto shift = [&x](Game o) { return translate(o, x); };
    return canonical(make_game(map_options(g.left(), shift), map_options(g.right(), shift)));
}

const std::string& bracket_encoding(Game g)
{
    if (auto hit = memos().bracket.find(g.id())) return **hit;
    auto encode_side = [](std::span<const Game> options) {
        std::vector<std::string> parts;
        for (Game o : options) parts.push_back(bracket_encoding(o));
        std::sort(parts.begin(), parts.end());
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += parts[i];
        }
        return out;
    };
    auto text = std::make_shared<const std::string>("{" + encode_side(g.left()) + "|" +
                                                     encode_side(g.right()) + "}");
    memos().bracket.insert(g.id(), text);
    // the first inserted string wins under a race; return that one
    return **memos().bracket.find(g.id());
}

}  // namespace diplace
