#pragma once

// Small seeded generators for the property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::string word(Rng& rng, std::size_t min_len, std::size_t max_len)
{
    std::string w(uniform(rng, min_len, max_len), 'a');
    for (auto& c : w)
        c = uniform(rng, 0, 1) ? 'b' : 'a';
    return w;
}

inline std::vector<std::string> words(Rng& rng, std::size_t count, std::size_t min_len, std::size_t max_len)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(word(rng, min_len, max_len));
    return out;
}

inline std::set<std::string> word_set(Rng& rng, std::size_t max_count, std::size_t max_len)
{
    std::set<std::string> out;
    const auto count = uniform(rng, 0, max_count);
    for (std::size_t i = 0; i < count; ++i)
        out.insert(word(rng, 1, max_len));
    return out;
}

// Signed letters a, b, A, B; not necessarily reduced.
inline std::string signed_word(Rng& rng, std::size_t max_len)
{
    static constexpr char letters[] = {'a', 'b', 'A', 'B'};
    std::string w(uniform(rng, 0, max_len), 'a');
    for (auto& c : w)
        c = letters[uniform(rng, 0, 3)];
    return w;
}

inline std::vector<std::uint32_t> map(Rng& rng, std::size_t m)
{
    std::vector<std::uint32_t> f(m);
    for (auto& x : f)
        x = static_cast<std::uint32_t>(uniform(rng, 0, m - 1));
    return f;
}

// A random injective partial map on {0, ..., n-1}.
inline std::vector<std::pair<std::int64_t, std::int64_t>> partial_perm(Rng& rng, std::size_t n)
{
    std::vector<std::int64_t> images(n);
    for (std::size_t i = 0; i < n; ++i)
        images[i] = static_cast<std::int64_t>(i);
    std::shuffle(images.begin(), images.end(), rng);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        if (uniform(rng, 0, 2) != 0)
            out.emplace_back(static_cast<std::int64_t>(i), images[i]);
    return out;
}

} // namespace gen
