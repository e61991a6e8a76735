#include <benchmark/benchmark.h>

#include "mcsdag/cli/cli.hpp"
#include "mcsdag/mcsdag.hpp"

namespace {

constexpr std::uint64_t kSeed = 20240611;

void BM_Build(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto [x, y] = mcsdag::cli::random_pair(n, 4, kSeed);
    std::size_t nodes = 0;
    for (auto _ : state) {
        auto g = mcsdag::build_mdag(x, y);
        nodes = g.node_count();
        benchmark::DoNotOptimize(g);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Build)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Compact(benchmark::State& state) {
    const auto [x, y] = mcsdag::cli::random_pair(static_cast<std::size_t>(state.range(0)), 4, kSeed);
    const auto pruned = mcsdag::build_mdag(x, y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcsdag::compact_mdag(pruned));
    }
}
BENCHMARK(BM_Compact)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

// Throughput of the resumable cursor; items are emitted strings.
void BM_Enumerate(benchmark::State& state) {
    const auto [x, y] = mcsdag::cli::random_pair(static_cast<std::size_t>(state.range(0)), 4, kSeed);
    const auto g = mcsdag::compact_mdag(mcsdag::build_mdag(x, y));
    const mcsdag::MdagQuery q(g);
    constexpr std::uint64_t kBatch = 100000;
    std::uint64_t total = 0;
    for (auto _ : state) {
        auto cursor = q.cursor();
        std::uint64_t k = 0;
        while (k < kBatch && cursor.next()) {
            ++k;
        }
        total += k;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(total));
}
BENCHMARK(BM_Enumerate)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Select(benchmark::State& state) {
    const auto [x, y] = mcsdag::cli::random_pair(static_cast<std::size_t>(state.range(0)), 4, kSeed);
    const auto g = mcsdag::compact_mdag(mcsdag::build_mdag(x, y));
    const mcsdag::MdagQuery q(g);
    const mcsdag::BigInt middle = q.count() / 2 + 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(q.select(middle));
    }
}
BENCHMARK(BM_Select)->Arg(50)->Arg(100);

void BM_Rank(benchmark::State& state) {
    const auto [x, y] = mcsdag::cli::random_pair(static_cast<std::size_t>(state.range(0)), 4, kSeed);
    const auto g = mcsdag::compact_mdag(mcsdag::build_mdag(x, y));
    const mcsdag::MdagQuery q(g);
    const std::string member = q.select(q.count() / 2 + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(q.rank(member));
    }
}
BENCHMARK(BM_Rank)->Arg(50)->Arg(100);

} // namespace

BENCHMARK_MAIN();
