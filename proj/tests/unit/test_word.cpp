#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "uniseq/errors.hpp"
#include "uniseq/word.hpp"

using namespace uniseq;

namespace {

std::set<Word> words(std::initializer_list<const char*> list)
{
    std::set<Word> out;
    for (auto w : list)
        out.emplace(w);
    return out;
}

} // namespace

TEST_CASE("words reject letters outside the alphabet")
{
    CHECK_THROWS_AS((void)Word("abc"), InvalidWord);
    CHECK_THROWS_AS((void)Word("A"), InvalidWord);
    CHECK(Word("").empty());
    CHECK(is_binary_word("abba"));
    CHECK_FALSE(is_binary_word("ab "));
}

TEST_CASE("shortlex order compares length first")
{
    CHECK(Word("b") < Word("aa"));
    CHECK(Word("ab") < Word("ba"));
    CHECK(Word("") < Word("a"));
    CHECK(Word("abab") == Word("ab").power(2));
    CHECK(Word("ab").power(0).empty());
    CHECK(Word("aab").reversed() == Word("baa"));
    CHECK(display(Word()) == "ε");
}

TEST_CASE("factor relations")
{
    CHECK(factor_relation(Word(""), Word("abaabb"), FactorKind::suffix));
    CHECK(factor_relation(Word("ab"), Word("abaabb"), FactorKind::prefix));
    CHECK_FALSE(factor_relation(Word("aababb"), Word("abaabababbab"), FactorKind::subword));

    CHECK(factor_relation(Word("ab"), Word("ab"), FactorKind::prefix));
    CHECK_FALSE(factor_relation(Word("ab"), Word("ab"), FactorKind::proper_prefix));
    CHECK_FALSE(factor_relation(Word("ab"), Word("ab"), FactorKind::proper_suffix));
    CHECK(factor_relation(Word(""), Word(""), FactorKind::subword));
    CHECK_FALSE(factor_relation(Word(""), Word(""), FactorKind::proper_prefix));
}

TEST_CASE("the length-6 window scan agrees on the subword example")
{
    CHECK_FALSE(oracle::subword("aababb", "abaabababbab"));
}

TEST_CASE("factor enumeration")
{
    CHECK(factors(Word("ab"), FactorFamily::prefixes, true) == words({"", "a"}));
    CHECK(factors(Word("aa"), FactorFamily::subwords, false) == words({"", "a", "aa"}));
    CHECK(factors(Word("abaabb"), FactorFamily::suffixes, true)
          == words({"", "b", "bb", "abb", "aabb", "baabb"}));
    CHECK(factors(Word(""), FactorFamily::subwords, true).empty());
    CHECK(factors(Word(""), FactorFamily::subwords, false) == words({""}));
}

TEST_CASE("suffix enumeration matches a direct scan")
{
    std::set<std::string> expected;
    const std::string w = "abaabb";
    for (std::size_t i = 1; i <= w.size(); ++i)
        expected.insert(w.substr(i));
    std::set<Word> got;
    for (const auto& s : expected)
        got.emplace(s);
    CHECK(factors(Word(w), FactorFamily::suffixes, true) == got);
}

TEST_CASE("factor predicates agree with window scans on random words")
{
    gen::Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto u = gen::word(rng, 0, 4);
        const auto w = gen::word(rng, 0, 8);
        CHECK(is_prefix(u, w) == oracle::prefix(u, w));
        CHECK(is_suffix(u, w) == oracle::suffix(u, w));
        CHECK(is_subword(u, w) == oracle::subword(u, w));
    }
}

TEST_CASE("every enumerated factor stands in its relation")
{
    gen::Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Word w(gen::word(rng, 0, 9));
        for (auto proper : {false, true}) {
            for (const auto& p : factors(w, FactorFamily::prefixes, proper))
                CHECK(factor_relation(p, w, proper ? FactorKind::proper_prefix : FactorKind::prefix));
            for (const auto& s : factors(w, FactorFamily::suffixes, proper))
                CHECK(factor_relation(s, w, proper ? FactorKind::proper_suffix : FactorKind::suffix));
            for (const auto& s : factors(w, FactorFamily::subwords, proper))
                CHECK(factor_relation(s, w, FactorKind::subword));
        }
        CHECK(factors(w, FactorFamily::prefixes, false).size() == w.size() + 1);
    }
}
