#include "diplace/expr.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace diplace {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Game parse()
    {
        Game g = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(const char* w)
    {
        skip();
        const std::string word(w);
        if (s_.compare(pos_, word.size(), word) != 0) return false;
        const std::size_t end = pos_ + word.size();
        if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
        pos_ = end;
        return true;
    }

    std::int64_t natural()
    {
        const std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (std::int64_t{1} << 50)) fail("number too large");
            v = v * 10 + (s_[pos_++] - '0');
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    Game expr()
    {
        Game g = term();
        for (;;) {
            if (accept('+'))
                g = add(g, term());
            else if (accept('-'))
                g = add(g, negate(term()));
            else
                return g;
        }
    }

    Game term()
    {
        if (accept('-')) return negate(term());
        return atom();
    }

    std::vector<Game> options(char close)
    {
        std::vector<Game> out;
        skip();
        if (pos_ < s_.size() && s_[pos_] == close) return out;
        out.push_back(expr());
        while (accept(',')) out.push_back(expr());
        return out;
    }

    Game atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::int64_t p = natural();
            if (!accept('/')) return number_game(Dyadic(p));
            skip();
            const std::size_t at = pos_;
            const std::int64_t q = natural();
            if (q <= 0 || (q & (q - 1)) != 0) throw ParseError("denominator must be a power of two", at);
            unsigned exp = 0;
            while ((std::int64_t{1} << exp) < q) ++exp;
            if (exp > 60) throw ParseError("denominator too large", at);
            return number_game(Dyadic(p, exp));
        }
        if (c == '*') {
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                const std::int64_t n = natural();
                if (n > 64) fail("nimber too large");
                return nimber(static_cast<unsigned>(n));
            }
            return star();
        }
        if (c == '{') {
            ++pos_;
            std::vector<Game> l = options('|');
            if (!accept('|')) fail("expected '|'");
            std::vector<Game> r = options('}');
            if (!accept('}')) fail("expected '}'");
            return canonical(make_game(std::move(l), std::move(r)));
        }
        if (c == '(') {
            ++pos_;
            Game g = expr();
            if (!accept(')')) fail("expected ')'");
            return g;
        }
        if (accept_word("up")) return up();
        if (accept_word("down")) return down();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

Game multiple(Game g, std::int64_t k)
{
    Game out = zero();
    const Game unit = k >= 0 ? g : negate(g);
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) out = add(out, unit);
    return out;
}

// x + k.up + *m when g has that form for small k, m.
std::optional<std::string> infinitesimal_form(Game g)
{
    const Dyadic x = left_stop(g);
    if (x != right_stop(g)) return std::nullopt;
    const Game rest = translate(g, -x);
    for (std::int64_t k = -6; k <= 6; ++k) {
        const Game ups = multiple(up(), k);
        for (unsigned m = 0; m < 8; ++m) {
            if (add(ups, nimber(m)) != rest) continue;
            std::vector<std::string> parts;
            if (x != Dyadic(0)) parts.push_back(x.to_string());
            for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) parts.push_back(k > 0 ? "up" : "down");
            if (m == 1) parts.push_back("*");
            if (m > 1) parts.push_back("*" + std::to_string(m));
            std::string out;
            for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
            return out;
        }
    }
    return std::nullopt;
}

// Numbers first in increasing order, then the rest by their text.
std::string join(std::span<const Game> games)
{
    std::vector<std::pair<std::optional<Dyadic>, std::string>> parts;
    for (Game g : games) parts.emplace_back(as_number(g), pretty(g));
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first.has_value() != b.first.has_value()) return a.first.has_value();
        if (a.first && *a.first != *b.first) return *a.first < *b.first;
        return a.second < b.second;
    });
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : ",") + p.second;
    return out;
}

}  // namespace

Game parse_expr(const std::string& text) { return Parser(text).parse(); }

Dyadic left_stop(Game g)
{
    if (auto x = as_number(g)) return *x;
    Dyadic best = right_stop(g.left()[0]);
    for (Game gl : g.left()) best = std::max(best, right_stop(gl));
    return best;
}

Dyadic right_stop(Game g)
{
    if (auto x = as_number(g)) return *x;
    Dyadic best = left_stop(g.right()[0]);
    for (Game gr : g.right()) best = std::min(best, left_stop(gr));
    return best;
}

std::string pretty(Game g)
{
    g = canonical(g);
    if (auto x = as_number(g)) return x->to_string();
    if (auto form = infinitesimal_form(g)) return *form;
    return "{" + join(g.left()) + "|" + join(g.right()) + "}";
}

}  // namespace diplace
