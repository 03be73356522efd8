#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "uniseq/word.hpp"

namespace uniseq {

/// Element of the free group on {a, b}, kept freely reduced.
///
/// Letters are 'a', 'b' and their inverses 'A', 'B'. The text form is the
/// reduced letter string itself, so "aB" is a·b⁻¹ and "" is the identity.
class GroupWord {
public:
    GroupWord() = default;
    /// Reduces `letters`; throws InvalidWord on characters outside "abAB".
    static GroupWord parse(std::string_view letters);
    static GroupWord from_word(const Word& w);

    [[nodiscard]] const std::string& str() const noexcept { return letters_; }
    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }

    /// Nonempty with every exponent +1, i.e. an element of A+.
    [[nodiscard]] bool is_positive() const noexcept;
    [[nodiscard]] GroupWord inverse() const;

    friend GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs);
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend std::strong_ordering operator<=>(const GroupWord& lhs, const GroupWord& rhs)
    {
        return lhs.letters_.compare(rhs.letters_) <=> 0;
    }

private:
    std::string letters_;
};

/// Free reduction of an arbitrary signed-letter string.
[[nodiscard]] GroupWord reduce(std::string_view letters);

} // namespace uniseq
