#include "longhop/codes.hpp"
#include "longhop/construct.hpp"
#include "longhop/gf2.hpp"
#include "longhop/routing.hpp"
#include "longhop/topology.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <set>

using namespace longhop;

namespace {

std::vector<Word> spanning_hops(unsigned d, unsigned m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Word> hops;
    for (unsigned i = 0; i < d; ++i) hops.push_back(Word{1} << i);
    std::set<Word> seen(hops.begin(), hops.end());
    std::uniform_int_distribution<Word> word(1, (Word{1} << d) - 1);
    while (hops.size() < m) {
        const Word h = word(rng);
        if (seen.insert(h).second) hops.push_back(h);
    }
    return hops;
}

void BM_Fwht(benchmark::State& state) {
    const auto n = std::size_t{1} << state.range(0);
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(i % 7);
    for (auto _ : state) {
        auto w = v;
        fwht_inplace(std::span<std::int64_t>(w));
        benchmark::DoNotOptimize(w.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Fwht)->DenseRange(10, 20, 5);

void BM_BisectionFwht(benchmark::State& state) {
    const auto d = static_cast<unsigned>(state.range(0));
    const auto t = build(d, spanning_hops(d, 64, 1));
    for (auto _ : state) benchmark::DoNotOptimize(bisection_fwht(t).b);
}
BENCHMARK(BM_BisectionFwht)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BisectionScan(benchmark::State& state) {
    const auto d = static_cast<unsigned>(state.range(0));
    const auto t = build(d, spanning_hops(d, 64, 1));
    for (auto _ : state) benchmark::DoNotOptimize(bisection_scan(t).b);
}
BENCHMARK(BM_BisectionScan)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MinDistance(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const auto g = network_to_code(build(k, spanning_hops(k, 2 * k + 8, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(g));
}
BENCHMARK(BM_MinDistance)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_DisjointPaths(benchmark::State& state) {
    const auto d = static_cast<unsigned>(state.range(0));
    const auto t = build(d, spanning_hops(d, d + 2, 3));
    const Word target = (Word{1} << d) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(disjoint_paths(t, target, 2).size());
}
BENCHMARK(BM_DisjointPaths)->Arg(6)->Arg(8)->Arg(10);

void BM_ForwardingTable(benchmark::State& state) {
    const auto d = static_cast<unsigned>(state.range(0));
    const auto t = build(d, spanning_hops(d, d + 2, 4));
    for (auto _ : state) benchmark::DoNotOptimize(forwarding_table(t, 2).entry_count());
}
BENCHMARK(BM_ForwardingTable)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
