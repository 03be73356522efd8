#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "uniseq/equations.hpp"
#include "uniseq/errors.hpp"

using namespace uniseq;

namespace {

FiniteMap fm(const char* text)
{
    return FiniteMap::parse(text);
}

} // namespace

TEST_CASE("finite maps")
{
    CHECK(fm("1,0").images() == std::vector<std::uint32_t>{1, 0});
    CHECK_THROWS_AS((void)fm("2,0"), InvalidMap);
    CHECK_THROWS_AS((void)fm("1,,0"), InvalidMap);
    CHECK_THROWS_AS((void)fm("1,0,"), InvalidMap);
    CHECK_THROWS_AS((void)fm(""), InvalidMap);
    CHECK_THROWS_AS((void)fm("x"), InvalidMap);
    CHECK(FiniteMap::identity(3) == fm("0,1,2"));
    // x ↦ ((x)f)g
    CHECK(fm("1,2,2").then(fm("0,0,1")) == fm("0,1,1"));
    for (std::uint64_t k = 0; k < 27; ++k)
        CHECK(FiniteMap::from_ordinal(k, 3).ordinal() == k);
    CHECK(FiniteMap::from_ordinal(1, 3) == fm("0,0,1"));
}

TEST_CASE("evaluating words")
{
    const Assignment s{fm("1,2,0"), fm("0,0,2")};
    CHECK(evaluate(Word("a"), s) == s.a);
    CHECK(evaluate(Word("ab"), s) == s.a.then(s.b));
    CHECK(evaluate(Word("ab"), s)(0) == s.b(s.a(0)));
    CHECK(evaluate(Word("aa"), {FiniteMap::identity(3), FiniteMap::identity(3)}) == FiniteMap::identity(3));
    CHECK_THROWS_AS((void)evaluate(Word(""), s), InvalidArgument);
}

TEST_CASE("solving the worked systems")
{
    const std::vector<Word> a{Word("a")};
    const std::vector<FiniteMap> f{fm("1,1")};
    const auto single = solve(a, f);
    REQUIRE(single.has_value());
    CHECK(single->a == fm("1,1"));

    const std::vector<Word> aa{Word("aa")};
    const std::vector<FiniteMap> swap{fm("1,0")};
    CHECK_FALSE(solve(aa, swap).has_value());
    CHECK_FALSE(oracle::solve({"aa"}, {{1, 0}}, 2).has_value());

    const std::vector<Word> ab{Word("ab")};
    const std::vector<FiniteMap> id{FiniteMap::identity(3)};
    const auto r = solve(ab, id, {3, 1});
    REQUIRE(r.has_value());
    CHECK(r->a == FiniteMap::identity(3));
    CHECK(r->b == FiniteMap::identity(3));
}

TEST_CASE("the least solution is found in lexicographic order")
{
    // (0,0,0) then (0,0,0) is least for ab = constant 0.
    const std::vector<Word> ab{Word("ab")};
    const std::vector<FiniteMap> zero{fm("0,0,0")};
    const auto r = solve(ab, zero);
    REQUIRE(r.has_value());
    CHECK(r->a == fm("0,0,0"));
    CHECK(r->b == fm("0,0,0"));

    // b never appears: its least value is the constant 0 map.
    const std::vector<Word> a{Word("aa")};
    const std::vector<FiniteMap> id{FiniteMap::identity(2)};
    const auto only_a = solve(a, id);
    REQUIRE(only_a.has_value());
    CHECK(only_a->a == FiniteMap::identity(2));
    CHECK(only_a->b == fm("0,0"));
}

TEST_CASE("input validation")
{
    const std::vector<Word> one{Word("a")};
    const std::vector<FiniteMap> two{fm("0"), fm("0")};
    CHECK_THROWS_AS((void)solve(one, two), InvalidArgument);
    const std::vector<Word> none;
    const std::vector<FiniteMap> no_targets;
    CHECK_THROWS_AS((void)solve(none, no_targets), InvalidArgument);
    const std::vector<Word> pair{Word("a"), Word("b")};
    const std::vector<FiniteMap> mixed{fm("0"), fm("0,1")};
    CHECK_THROWS_AS((void)solve(pair, mixed), InvalidArgument);
    const std::vector<FiniteMap> big{FiniteMap::identity(5)};
    CHECK_THROWS_AS((void)solve(one, big), CapExceeded);
    CHECK_NOTHROW((void)solve(one, big, {5, 1}));
    const std::vector<Word> empty_word{Word("")};
    const std::vector<FiniteMap> t{fm("0")};
    CHECK_THROWS_AS((void)solve(empty_word, t), InvalidArgument);
}

TEST_CASE("pruned search matches the unpruned enumeration")
{
    gen::Rng rng(61);
    int sat = 0, unsat = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = gen::uniform(rng, 1, 3);
        const auto count = gen::uniform(rng, 1, 2);
        std::vector<Word> words;
        std::vector<FiniteMap> targets;
        std::vector<std::string> ow;
        std::vector<oracle::Map> ot;
        for (std::size_t i = 0; i < count; ++i) {
            ow.push_back(gen::word(rng, 1, 4));
            ot.push_back(gen::map(rng, m));
            words.emplace_back(ow.back());
            targets.emplace_back(ot.back());
        }
        const auto got = solve(words, targets);
        const auto want = oracle::solve(ow, ot, m);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            ++sat;
            CHECK(got->a.images() == want->first);
            CHECK(got->b.images() == want->second);
            for (std::size_t i = 0; i < count; ++i)
                CHECK(evaluate(words[i], *got) == targets[i]);
        } else {
            ++unsat;
        }
    }
    CHECK(sat > 0);
    CHECK(unsat > 0);
}

TEST_CASE("the answer does not depend on the number of workers")
{
    gen::Rng rng(62);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = gen::uniform(rng, 2, 3);
        std::vector<Word> words{Word(gen::word(rng, 1, 4)), Word(gen::word(rng, 1, 4))};
        std::vector<FiniteMap> targets{FiniteMap(gen::map(rng, m)), FiniteMap(gen::map(rng, m))};
        const auto one = solve(words, targets, {4, 1});
        for (unsigned threads : {2u, 3u, 4u})
            CHECK(solve(words, targets, {4, threads}) == one);
    }
}
