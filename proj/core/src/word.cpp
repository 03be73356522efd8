#include "uniseq/word.hpp"

#include <algorithm>

#include "uniseq/errors.hpp"

namespace uniseq {

bool is_binary_word(std::string_view letters) noexcept
{
    return std::all_of(letters.begin(), letters.end(), [](char c) { return c == 'a' || c == 'b'; });
}

Word::Word(std::string letters) : letters_(std::move(letters))
{
    if (!is_binary_word(letters_))
        throw InvalidWord("word '" + letters_ + "' has letters outside {a, b}");
}

Word Word::substr(std::size_t pos, std::size_t len) const
{
    return Word(letters_.substr(pos, len), Unchecked{});
}

Word Word::reversed() const
{
    return Word(std::string(letters_.rbegin(), letters_.rend()), Unchecked{});
}

Word& Word::operator+=(const Word& other)
{
    letters_ += other.letters_;
    return *this;
}

Word Word::power(std::size_t times) const
{
    std::string out;
    out.reserve(letters_.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        out += letters_;
    return Word(std::move(out), Unchecked{});
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs)
{
    if (auto c = lhs.size() <=> rhs.size(); c != 0)
        return c;
    return lhs.letters_.compare(rhs.letters_) <=> 0;
}

std::string display(const Word& w)
{
    return w.empty() ? std::string("ε") : w.str();
}

bool is_prefix(std::string_view u, std::string_view w) noexcept
{
    return w.substr(0, u.size()) == u;
}

bool is_suffix(std::string_view u, std::string_view w) noexcept
{
    return u.size() <= w.size() && w.substr(w.size() - u.size()) == u;
}

bool is_subword(std::string_view u, std::string_view w) noexcept
{
    return w.find(u) != std::string_view::npos;
}

bool factor_relation(const Word& u, const Word& w, FactorKind kind) noexcept
{
    switch (kind) {
    case FactorKind::prefix:
        return is_prefix(u.view(), w.view());
    case FactorKind::proper_prefix:
        return u.size() < w.size() && is_prefix(u.view(), w.view());
    case FactorKind::suffix:
        return is_suffix(u.view(), w.view());
    case FactorKind::proper_suffix:
        return u.size() < w.size() && is_suffix(u.view(), w.view());
    case FactorKind::subword:
        return is_subword(u.view(), w.view());
    }
    return false;
}

std::set<Word> factors(const Word& w, FactorFamily family, bool proper)
{
    std::set<Word> out;
    const std::size_t n = w.size();
    switch (family) {
    case FactorFamily::prefixes:
        for (std::size_t len = 0; len <= n; ++len)
            out.insert(w.substr(0, len));
        break;
    case FactorFamily::suffixes:
        for (std::size_t len = 0; len <= n; ++len)
            out.insert(w.substr(n - len));
        break;
    case FactorFamily::subwords:
        out.insert(Word{});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t len = 1; i + len <= n; ++len)
                out.insert(w.substr(i, len));
        break;
    }
    if (proper)
        out.erase(w);
    return out;
}

} // namespace uniseq
