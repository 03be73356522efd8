#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "uniseq/word.hpp"

namespace uniseq {

/// A finite set of nonempty words standing for the submonoid they generate.
/// The empty set generates {ε}.
class GeneratorSet {
public:
    GeneratorSet() = default;
    /// ε is dropped; it generates nothing new.
    explicit GeneratorSet(std::set<Word> generators);
    GeneratorSet(std::initializer_list<const char*> generators);

    [[nodiscard]] const std::set<Word>& generators() const noexcept { return generators_; }
    [[nodiscard]] bool empty() const noexcept { return generators_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return generators_.size(); }

    /// Is `w` a product of generators? ε always is.
    [[nodiscard]] bool contains(std::string_view w) const;
    [[nodiscard]] bool contains(const Word& w) const { return contains(w.view()); }

    /// One factorization of `w`, or nullopt if `w` is not in the submonoid.
    /// At every position the longest generator that still leaves a
    /// factorizable remainder is taken.
    [[nodiscard]] std::optional<std::vector<Word>> factorize(std::string_view w) const;

    /// member[i] is true iff w[0, i) lies in the submonoid; size |w| + 1.
    [[nodiscard]] std::vector<bool> prefix_members(std::string_view w) const;
    /// member[i] is true iff w[i, |w|) lies in the submonoid; size |w| + 1.
    [[nodiscard]] std::vector<bool> suffix_members(std::string_view w) const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::set<Word> generators_;
    std::size_t max_length_ = 0;
};

/// A generating set none of whose elements is a product of the others.
struct IrredundantSet {
    std::set<Word> elements;
    [[nodiscard]] GeneratorSet as_generators() const { return GeneratorSet(elements); }
};

/// Words v with words[i] = s v u v s' for some i, s, s' in <gens>, u in A*.
/// Always contains ε.
[[nodiscard]] std::set<Word> extract_repeated(const GeneratorSet& gens, std::span<const Word> words);

/// Words v with words[i] = s v t and words[j] = t' v s' for distinct i, j,
/// s, s' in <gens>, t, t' in A*. Always contains ε.
[[nodiscard]] std::set<Word> extract_overlaps(const GeneratorSet& gens, std::span<const Word> words);

/// Greedy shortlex pass: keep x iff it is not generated by what was kept.
[[nodiscard]] IrredundantSet irredundant_generators(const std::set<Word>& pool);

struct ClosureRound {
    std::set<Word> repeated;  // the X set of the round
    std::set<Word> overlaps;  // the Y set of the round
};

struct ClosureResult {
    GeneratorSet generators;          // irredundant generators of the closure
    std::vector<ClosureRound> rounds; // one entry per extraction round
    std::set<Word> pool;              // union of every extracted set, ε included
};

/// The least submonoid of A* closed under both extraction rules for the given
/// finite word list. Throws EmptyInput for an empty list or an empty word.
[[nodiscard]] ClosureResult closure(std::span<const Word> words);

/// Do the extraction rules already produce nothing outside <gens>?
[[nodiscard]] bool is_closed(const GeneratorSet& gens, std::span<const Word> words);

} // namespace uniseq
