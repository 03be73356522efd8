#include "uniseq/group_word.hpp"

#include <algorithm>

#include "uniseq/errors.hpp"

namespace uniseq {

namespace {

bool is_signed_letter(char c) noexcept
{
    return c == 'a' || c == 'b' || c == 'A' || c == 'B';
}

char invert_letter(char c) noexcept
{
    switch (c) {
    case 'a': return 'A';
    case 'b': return 'B';
    case 'A': return 'a';
    default: return 'b';
    }
}

} // namespace

GroupWord reduce(std::string_view letters)
{
    return GroupWord::parse(letters);
}

GroupWord GroupWord::parse(std::string_view letters)
{
    GroupWord out;
    for (char c : letters) {
        if (!is_signed_letter(c))
            throw InvalidWord(std::string("'") + c + "' is not a free group letter (expected a, b, A, B)");
        if (!out.letters_.empty() && out.letters_.back() == invert_letter(c))
            out.letters_.pop_back();
        else
            out.letters_.push_back(c);
    }
    return out;
}

GroupWord GroupWord::from_word(const Word& w)
{
    GroupWord out;
    out.letters_ = w.str();
    return out;
}

bool GroupWord::is_positive() const noexcept
{
    return !letters_.empty()
           && std::all_of(letters_.begin(), letters_.end(), [](char c) { return c == 'a' || c == 'b'; });
}

GroupWord GroupWord::inverse() const
{
    GroupWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back(invert_letter(*it));
    return out;
}

GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs)
{
    GroupWord out = lhs;
    for (char c : rhs.letters_) {
        if (!out.letters_.empty() && out.letters_.back() == invert_letter(c))
            out.letters_.pop_back();
        else
            out.letters_.push_back(c);
    }
    return out;
}

} // namespace uniseq
