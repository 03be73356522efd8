#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uniseq/json_fwd.hpp"

#include "uniseq/closure.hpp"
#include "uniseq/sequence.hpp"
#include "uniseq/word.hpp"

namespace uniseq {

/// w_n = prefix · middle · suffix where prefix and suffix are the longest
/// prefix and suffix of w_n inside the submonoid and middle is nonempty.
struct Decomposition {
    Word prefix;
    Word middle;
    Word suffix;
    std::int64_t index = 0;

    [[nodiscard]] Word whole() const { return prefix + middle + suffix; }
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Violation {
    std::string condition;
    std::vector<std::int64_t> indices;
    std::vector<Word> witness;
};

/// Result of a bounded check. Verdicts only ever speak about indices up to
/// `bound`.
struct Verdict {
    std::int64_t bound = 0;
    std::vector<Violation> violations;
    /// Observations that do not fail the check.
    std::vector<Violation> warnings;
    /// Set when the check's precondition does not hold; `violations` then
    /// carries a single "not-applicable" entry.
    bool applicable = true;

    [[nodiscard]] bool holds() const noexcept { return violations.empty(); }
};

/// A cut w = s·t·v with s·t and t·v both in the submonoid.
struct SplitWitness {
    Word left;   // s
    Word middle; // t
    Word right;  // v
};

/// True iff no cut w = s·t·v has s·t and t·v in <gens>.
[[nodiscard]] bool check_split(const Word& w, const GeneratorSet& gens);
[[nodiscard]] std::optional<SplitWitness> find_split(const Word& w, const GeneratorSet& gens);

/// Longest-prefix / longest-suffix decomposition. Throws SplitViolation when
/// check_split(w, gens) is false.
[[nodiscard]] Decomposition decompose(const Word& w, const GeneratorSet& gens, std::int64_t index);

/// Everything computed while checking the sufficient condition on w_1..w_N.
struct TheoremAnalysis {
    std::vector<Word> words;
    ClosureResult closure;
    /// decompositions[n - 1] is empty when w_n fails the split condition.
    std::vector<std::optional<Decomposition>> decompositions;
    Verdict verdict;
};

/// Bounded check of the split/decomposition hypotheses for w_1..w_N.
/// Requires N >= 2; instantiation errors propagate.
[[nodiscard]] TheoremAnalysis check_theorem(const SequenceFamily& family, std::int64_t bound);
[[nodiscard]] TheoremAnalysis check_theorem(std::span<const Word> words);

/// Bounded check of the prefix/suffix-overlap-free condition: no nonempty
/// proper prefix of w_n is a suffix of any w_m (m = n included), and w_n is
/// not a subword of w_m for m != n.
[[nodiscard]] Verdict check_corollary(const SequenceFamily& family, std::int64_t bound);
[[nodiscard]] Verdict check_corollary(std::span<const Word> words);

/// All words in xA*y and every generator in xA*y ∪ {ε} for {x, y} = {a, b}.
/// Not applicable when a or b lies in <gens>.
[[nodiscard]] Verdict check_sandwich(const GeneratorSet& gens, std::span<const Word> words);

[[nodiscard]] Json to_json(const Verdict& verdict);
[[nodiscard]] Json to_json(const Decomposition& d);

} // namespace uniseq
