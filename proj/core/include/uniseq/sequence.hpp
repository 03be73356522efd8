#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "uniseq/json_fwd.hpp"

#include "uniseq/word.hpp"

namespace uniseq {

/// Exponent c*n + d with c, d >= 0 and c + d >= 1, so every power is used at
/// least once for n >= 1.
struct AffineExponent {
    std::int64_t c = 0;
    std::int64_t d = 1;

    [[nodiscard]] std::int64_t at(std::int64_t n) const noexcept { return c * n + d; }
    friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

struct Literal {
    Word word;
    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Power {
    Word base;
    AffineExponent exponent;
    friend bool operator==(const Power&, const Power&) = default;
};

using Segment = std::variant<Literal, Power>;
using Template = std::vector<Segment>;

/// A finite description of a sequence (w_1, w_2, ...) of words over {a, b}.
///
/// A parametric family has a single template serving every index. An
/// explicit family lists one template per index and is finite; asking for an
/// index beyond the list throws IndexOutOfRange.
class SequenceFamily {
public:
    static SequenceFamily parametric(Template t);
    static SequenceFamily explicit_list(std::vector<Template> templates);
    static SequenceFamily explicit_words(const std::vector<Word>& words);

    [[nodiscard]] const std::vector<Template>& templates() const noexcept { return templates_; }
    [[nodiscard]] bool is_explicit() const noexcept { return explicit_; }

    /// w_n for n >= 1.
    [[nodiscard]] Word instantiate(std::int64_t n) const;

    /// (w_1, ..., w_count).
    [[nodiscard]] std::vector<Word> first(std::int64_t count) const;

    friend bool operator==(const SequenceFamily&, const SequenceFamily&) = default;

private:
    SequenceFamily(std::vector<Template> templates, bool is_explicit);

    std::vector<Template> templates_;
    bool explicit_ = false;
};

/// Replaces every letter of every word by its image. Input words may be over
/// any alphabet; throws MissingLetterImage for a letter without an image.
[[nodiscard]] std::vector<Word> substitute(std::span<const std::string> sequence,
                                           const std::map<char, Word>& assignment);
[[nodiscard]] Word substitute(std::string_view word, const std::map<char, Word>& assignment);

/// Sequences used throughout the tests, benchmarks and docs.
namespace families {
/// ab a^{n+1} b^2
[[nodiscard]] SequenceFamily banach();
/// a^2 b^3 (abab^3)^{n+1} ab^2 ab^3
[[nodiscard]] SequenceFamily sierpinski();
/// aba (ab)^{n+1} bab
[[nodiscard]] SequenceFamily aba_ab_bab();
/// (ab)^n
[[nodiscard]] SequenceFamily ab_power();
} // namespace families

// JSON family files:
//   { "alphabet": "ab",
//     "templates": [ [ {"lit": "aba"}, {"pow": {"base": "ab", "c": 1, "d": 1}}, {"lit": "bab"} ] ] }
// A single template is parametric; several templates form an explicit list.
// "words": ["ab", "ba"] is accepted as shorthand for an explicit list of
// literals. Both functions throw ParseError or UnsupportedAlphabet.
[[nodiscard]] SequenceFamily family_from_json(const Json& doc);
[[nodiscard]] SequenceFamily parse_family(std::string_view text);
[[nodiscard]] SequenceFamily parse_family_file(const std::string& path);
[[nodiscard]] Json family_to_json(const SequenceFamily& family);

} // namespace uniseq
