#include <benchmark/benchmark.h>

#include "uniseq/actions.hpp"
#include "uniseq/closure.hpp"
#include "uniseq/conditions.hpp"
#include "uniseq/equations.hpp"
#include "uniseq/witness.hpp"

using namespace uniseq;

namespace {

void closure_aba(benchmark::State& state)
{
    const auto words = families::aba_ab_bab().first(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(closure(words));
}
BENCHMARK(closure_aba)->DenseRange(2, 10, 4);

void closure_sierpinski(benchmark::State& state)
{
    const auto words = families::sierpinski().first(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(closure(words));
}
BENCHMARK(closure_sierpinski)->DenseRange(2, 10, 4);

void membership(benchmark::State& state)
{
    const GeneratorSet gens{"ab", "aab", "abb", "ba"};
    const auto w = Word("ab").power(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gens.contains(w));
}
BENCHMARK(membership)->RangeMultiplier(4)->Range(4, 1024);

void theorem_check(benchmark::State& state)
{
    const auto family = families::aba_ab_bab();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_theorem(family, state.range(0)));
}
BENCHMARK(theorem_check)->DenseRange(2, 8, 3);

void witness_eval(benchmark::State& state)
{
    std::vector<TargetFunction> targets;
    for (std::int64_t n = 1; n <= 3; ++n)
        targets.push_back(TargetFunction::seeded(0, n));
    const auto ctx = make_context(check_theorem(families::aba_ab_bab(), 3), std::move(targets));
    const auto samples = sample_states(0, 64);
    const auto w = families::aba_ab_bab().instantiate(3);
    for (auto _ : state)
        for (const auto& x : samples)
            benchmark::DoNotOptimize(eval_hom(w, x, Hom::phi, ctx));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples.size()));
}
BENCHMARK(witness_eval);

void solve_unsat(benchmark::State& state)
{
    const auto m = static_cast<std::size_t>(state.range(0));
    const Word aa("aa");
    std::vector<std::uint32_t> cycle(m);
    for (std::size_t x = 0; x < m; ++x)
        cycle[x] = static_cast<std::uint32_t>((x + 1) % m);
    // An m-cycle is a square only for odd m; even m exhausts the search.
    const FiniteMap target(cycle);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(std::span(&aa, 1), std::span(&target, 1), {m, 1}));
}
BENCHMARK(solve_unsat)->DenseRange(2, 4, 2)->Unit(benchmark::kMillisecond);

void blocks_chain(benchmark::State& state)
{
    const auto n = state.range(0);
    std::map<Point, Point> shift;
    for (Point x = 0; x + 1 < n; x += 2)
        shift.emplace(x, x + 1);
    std::map<Point, Point> swap;
    for (Point x = 1; x + 1 < n; x += 2)
        swap.emplace(x, x + 1);
    const std::vector<PartialPerm> gens{PartialPerm(shift), PartialPerm(swap)};
    PointSet ground;
    for (Point x = 0; x < n; ++x)
        ground.insert(x);
    for (auto _ : state)
        benchmark::DoNotOptimize(blocks(gens, ground));
}
BENCHMARK(blocks_chain)->RangeMultiplier(8)->Range(8, 4096);

} // namespace

BENCHMARK_MAIN();
