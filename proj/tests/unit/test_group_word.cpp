#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "uniseq/errors.hpp"
#include "uniseq/group_word.hpp"

using namespace uniseq;

TEST_CASE("free reduction")
{
    CHECK(GroupWord::parse("a") * GroupWord::parse("A") == GroupWord());
    CHECK(GroupWord::parse("ab") * GroupWord::parse("BA") == GroupWord());
    CHECK((GroupWord::parse("ab") * GroupWord::parse("ab")).str() == "abab");
    CHECK(GroupWord::parse("aBbA").empty());
    CHECK(GroupWord::parse("abBa").str() == "aa");
    CHECK(reduce("BaAb").empty());
    CHECK_THROWS_AS((void)GroupWord::parse("abc"), InvalidWord);
}

TEST_CASE("positivity and inverses")
{
    CHECK(GroupWord::parse("ab").is_positive());
    CHECK_FALSE(GroupWord::parse("aB").is_positive());
    CHECK_FALSE(GroupWord().is_positive());
    CHECK(GroupWord::parse("aB").inverse().str() == "bA");
    CHECK(GroupWord::from_word(Word("abb")).str() == "abb");
}

TEST_CASE("reduction agrees with pairwise cancellation")
{
    gen::Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const auto w = gen::signed_word(rng, 12);
        CHECK(reduce(w).str() == oracle::free_reduce(w));
    }
}

TEST_CASE("group laws on random elements")
{
    gen::Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = reduce(gen::signed_word(rng, 8));
        const auto y = reduce(gen::signed_word(rng, 8));
        const auto z = reduce(gen::signed_word(rng, 8));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * x.inverse() == GroupWord());
        CHECK(x.inverse() * x == GroupWord());
        CHECK(x * GroupWord() == x);
        CHECK((x * y).inverse() == y.inverse() * x.inverse());
        CHECK(reduce(x.str()) == x);
    }
}
