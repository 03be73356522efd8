#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>

namespace uniseq {

/// A finite word over the alphabet {a, b}. The empty word is the identity of
/// the free monoid.
///
/// Words are ordered shortlex (length first, then lexicographically), so a
/// `std::set<Word>` iterates in the deterministic report order.
class Word {
public:
    Word() = default;

    /// Throws InvalidWord if `letters` contains anything other than 'a'/'b'.
    explicit Word(std::string letters);
    explicit Word(std::string_view letters) : Word(std::string(letters)) {}
    explicit Word(const char* letters) : Word(std::string(letters)) {}

    [[nodiscard]] const std::string& str() const noexcept { return letters_; }
    [[nodiscard]] std::string_view view() const noexcept { return letters_; }
    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] char operator[](std::size_t i) const { return letters_[i]; }

    [[nodiscard]] Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
    [[nodiscard]] Word reversed() const;

    Word& operator+=(const Word& other);
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

    /// Repeats this word `times` times.
    [[nodiscard]] Word power(std::size_t times) const;

private:
    struct Unchecked {};
    Word(std::string letters, Unchecked) : letters_(std::move(letters)) {}

    std::string letters_;
};

/// True iff every character is 'a' or 'b'.
[[nodiscard]] bool is_binary_word(std::string_view letters) noexcept;

/// Renders ε for the empty word; used by text reports.
[[nodiscard]] std::string display(const Word& w);

enum class FactorKind { prefix, proper_prefix, suffix, proper_suffix, subword };
enum class FactorFamily { prefixes, suffixes, subwords };

[[nodiscard]] bool is_prefix(std::string_view u, std::string_view w) noexcept;
[[nodiscard]] bool is_suffix(std::string_view u, std::string_view w) noexcept;
[[nodiscard]] bool is_subword(std::string_view u, std::string_view w) noexcept;

/// Does `u` stand in relation `kind` to `w`? "proper" excludes u == w; the
/// empty word is a prefix, suffix and subword of everything.
[[nodiscard]] bool factor_relation(const Word& u, const Word& w, FactorKind kind) noexcept;

/// All factors of the given family, ε included; `proper` drops `w` itself.
[[nodiscard]] std::set<Word> factors(const Word& w, FactorFamily family, bool proper);

} // namespace uniseq
