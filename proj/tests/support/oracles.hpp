#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond plain value types, and trade all efficiency for obviousness.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Words = std::vector<std::string>;
using WordSet = std::set<std::string>;

inline bool shortlex_less(const std::string& x, const std::string& y)
{
    return x.size() != y.size() ? x.size() < y.size() : x < y;
}

// Is w a product of words from gens? Plain recursion on the first factor.
inline bool member(const WordSet& gens, const std::string& w)
{
    if (w.empty())
        return true;
    for (const auto& g : gens)
        if (!g.empty() && w.compare(0, g.size(), g) == 0 && member(gens, w.substr(g.size())))
            return true;
    return false;
}

// Every sliding window of length |u| compared against u.
inline bool subword(const std::string& u, const std::string& w)
{
    if (u.size() > w.size())
        return false;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
        if (w.substr(i, u.size()) == u)
            return true;
    return false;
}

inline bool prefix(const std::string& u, const std::string& w)
{
    return u.size() <= w.size() && w.substr(0, u.size()) == u;
}

inline bool suffix(const std::string& u, const std::string& w)
{
    return u.size() <= w.size() && w.substr(w.size() - u.size()) == u;
}

// v with w = s v u v s', s and s' in <gens>: every 4-cut of every word.
inline WordSet repeated(const WordSet& gens, const Words& words)
{
    WordSet out{""};
    for (const auto& w : words) {
        const std::size_t n = w.size();
        for (std::size_t i1 = 0; i1 <= n; ++i1)
            for (std::size_t i2 = i1; i2 <= n; ++i2)
                for (std::size_t i3 = i2; i3 <= n; ++i3)
                    for (std::size_t i4 = i3; i4 <= n; ++i4) {
                        const auto v = w.substr(i1, i2 - i1);
                        if (v != w.substr(i3, i4 - i3))
                            continue;
                        if (member(gens, w.substr(0, i1)) && member(gens, w.substr(i4)))
                            out.insert(v);
                    }
    }
    return out;
}

// v with w_i = s v t and w_j = t' v s' for i != j, s and s' in <gens>.
inline WordSet overlaps(const WordSet& gens, const Words& words)
{
    WordSet out{""};
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i == j)
                continue;
            const auto& wi = words[i];
            const auto& wj = words[j];
            WordSet after_prefix;
            for (std::size_t a = 0; a <= wi.size(); ++a)
                for (std::size_t b = a; b <= wi.size(); ++b)
                    if (member(gens, wi.substr(0, a)))
                        after_prefix.insert(wi.substr(a, b - a));
            for (std::size_t a = 0; a <= wj.size(); ++a)
                for (std::size_t b = a; b <= wj.size(); ++b)
                    if (member(gens, wj.substr(b)) && after_prefix.count(wj.substr(a, b - a)))
                        out.insert(wj.substr(a, b - a));
        }
    return out;
}

// Greedy shortlex pass over the pool.
inline WordSet irredundant(const WordSet& pool)
{
    Words sorted(pool.begin(), pool.end());
    std::sort(sorted.begin(), sorted.end(), shortlex_less);
    WordSet kept;
    for (const auto& x : sorted)
        if (!x.empty() && !member(kept, x))
            kept.insert(x);
    return kept;
}

struct Closure {
    WordSet generators;
    std::size_t rounds = 0;
};

// Grows the pool until neither rule yields a non-member of <pool>.
inline Closure closure(const Words& words)
{
    WordSet pool;
    std::size_t rounds = 0;
    for (;;) {
        ++rounds;
        const auto gens = irredundant(pool);
        bool grew = false;
        for (const auto& v : repeated(gens, words))
            if (!member(gens, v)) {
                pool.insert(v);
                grew = true;
            }
        for (const auto& v : overlaps(gens, words))
            if (!member(gens, v)) {
                pool.insert(v);
                grew = true;
            }
        if (!grew)
            return {irredundant(pool), rounds};
    }
}

// Is there a cut w = s t v with s t and t v in <gens>?
inline bool split_fails(const WordSet& gens, const std::string& w)
{
    for (std::size_t i = 0; i <= w.size(); ++i)
        for (std::size_t j = i; j <= w.size(); ++j)
            if (member(gens, w.substr(0, j)) && member(gens, w.substr(i)))
                return true;
    return false;
}

struct Decomposition {
    std::string prefix, middle, suffix;
};

// Longest prefix and longest suffix in <gens> by trying every length.
inline Decomposition decompose(const WordSet& gens, const std::string& w)
{
    std::size_t p = 0, s = 0;
    for (std::size_t len = 0; len <= w.size(); ++len) {
        if (member(gens, w.substr(0, len)))
            p = len;
        if (member(gens, w.substr(w.size() - len)))
            s = len;
    }
    return {w.substr(0, p), w.substr(p, w.size() - p - s), w.substr(w.size() - s)};
}

// Free reduction by repeatedly deleting an adjacent x X or X x pair.
inline std::string free_reduce(std::string w)
{
    const auto cancels = [](char x, char y) { return x != y && std::tolower(x) == std::tolower(y); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (cancels(w[i], w[i + 1])) {
                w.erase(i, 2);
                changed = true;
                break;
            }
    }
    return w;
}

using Map = std::vector<std::uint32_t>;

// x ↦ ((x)f)g
inline Map then(const Map& f, const Map& g)
{
    Map out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
        out[x] = g[f[x]];
    return out;
}

inline Map evaluate(const std::string& w, const Map& a, const Map& b)
{
    Map out(a.size());
    std::iota(out.begin(), out.end(), 0u);
    for (char c : w)
        out = then(out, c == 'a' ? a : b);
    return out;
}

inline std::vector<Map> all_maps(std::size_t m)
{
    std::vector<Map> out;
    Map f(m, 0);
    for (;;) {
        out.push_back(f);
        std::size_t i = m;
        while (i > 0 && f[i - 1] + 1 == m)
            f[--i] = 0;
        if (i == 0)
            return out;
        ++f[i - 1];
    }
}

// Every (a, b) in lexicographic order, no pruning.
inline std::optional<std::pair<Map, Map>> solve(const Words& words, const std::vector<Map>& targets, std::size_t m)
{
    const auto maps = all_maps(m);
    for (const auto& a : maps)
        for (const auto& b : maps) {
            bool ok = true;
            for (std::size_t i = 0; i < words.size() && ok; ++i)
                ok = evaluate(words[i], a, b) == targets[i];
            if (ok)
                return std::pair{a, b};
        }
    return std::nullopt;
}

// Union-find over the arcs x -- (x)g of every generator.
class UnionFind {
public:
    std::int64_t find(std::int64_t x)
    {
        parent_.try_emplace(x, x);
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::int64_t x, std::int64_t y)
    {
        x = find(x);
        y = find(y);
        if (x != y)
            parent_[std::max(x, y)] = std::min(x, y);
    }

private:
    std::map<std::int64_t, std::int64_t> parent_;
};

using Perm = std::map<std::int64_t, std::int64_t>;

inline std::set<std::set<std::int64_t>> blocks(const std::vector<Perm>& gens, const std::set<std::int64_t>& ground)
{
    UnionFind uf;
    for (auto x : ground)
        uf.find(x);
    for (const auto& g : gens)
        for (const auto& [x, y] : g)
            uf.unite(x, y);
    std::map<std::int64_t, std::set<std::int64_t>> by_root;
    std::set<std::int64_t> points = ground;
    for (const auto& g : gens)
        for (const auto& [x, y] : g) {
            points.insert(x);
            points.insert(y);
        }
    for (auto x : points)
        by_root[uf.find(x)].insert(x);
    std::set<std::set<std::int64_t>> out;
    for (auto& [root, block] : by_root)
        out.insert(block);
    return out;
}

// Does some bijection U -> V commute with every generator? Tries all of them.
inline bool equivalent(const std::set<std::int64_t>& u, const std::set<std::int64_t>& v, const std::vector<Perm>& gens)
{
    if (u.size() != v.size())
        return false;
    std::vector<std::int64_t> us(u.begin(), u.end()), vs(v.begin(), v.end());
    do {
        Perm phi;
        for (std::size_t i = 0; i < us.size(); ++i)
            phi[us[i]] = vs[i];
        bool ok = true;
        for (const auto& g : gens)
            for (auto z : us) {
                auto gz = g.find(z);
                auto gphi = g.find(phi[z]);
                if ((gz == g.end()) != (gphi == g.end()))
                    ok = false;
                else if (gz != g.end() && phi.at(gz->second) != gphi->second)
                    ok = false;
            }
        if (ok)
            return true;
    } while (std::next_permutation(vs.begin(), vs.end()));
    return false;
}

} // namespace oracle
