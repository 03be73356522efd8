#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "uniseq/json_fwd.hpp"
#include "uniseq/word.hpp"

namespace uniseq {

/// A total function on {0, ..., m-1}, acting on the right: (x)f = images[x].
class FiniteMap {
public:
    FiniteMap() = default;
    /// Throws InvalidMap if some image is >= images.size().
    explicit FiniteMap(std::vector<std::uint32_t> images);

    static FiniteMap identity(std::size_t m);
    /// "1,0" -> the transposition on {0, 1}. Throws InvalidMap.
    static FiniteMap parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return images_.size(); }
    [[nodiscard]] std::uint32_t operator()(std::uint32_t x) const { return images_.at(x); }
    [[nodiscard]] const std::vector<std::uint32_t>& images() const noexcept { return images_; }

    /// x ↦ ((x)this)next
    [[nodiscard]] FiniteMap then(const FiniteMap& next) const;

    /// Position in the lexicographic enumeration of all maps on m points.
    [[nodiscard]] std::uint64_t ordinal() const;
    [[nodiscard]] static FiniteMap from_ordinal(std::uint64_t ordinal, std::size_t m);

    friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

private:
    std::vector<std::uint32_t> images_;
};

struct Assignment {
    FiniteMap a;
    FiniteMap b;
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Image of a nonempty word: letters compose left to right.
[[nodiscard]] FiniteMap evaluate(const Word& w, const Assignment& assignment);

struct SolveOptions {
    std::size_t max_set_size = 4;
    /// Workers partition the images of a; the answer does not depend on it.
    unsigned threads = 1;
};

/// Lexicographically least assignment (ordered by a, then b) satisfying
/// evaluate(words[i]) == targets[i] for all i, or nullopt when none exists.
/// Throws InvalidArgument on mismatched inputs and CapExceeded when the set
/// is larger than options.max_set_size.
[[nodiscard]] std::optional<Assignment> solve(std::span<const Word> words, std::span<const FiniteMap> targets,
                                              const SolveOptions& options = {});

[[nodiscard]] Json to_json(const FiniteMap& f);

} // namespace uniseq
