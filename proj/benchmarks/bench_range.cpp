#include "wavetk/range_index.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wavetk;

namespace {

std::vector<int64_t> random_array(uint64_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int64_t> a(n);
    for (auto& v : a)
        v = int64_t(rng() % n);
    return a;
}

} // namespace

static void BM_range_build(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    std::vector<int64_t> a = random_array(n, 11);
    for (auto _ : state) {
        range_index ri = range_index::build(a);
        benchmark::DoNotOptimize(ri.size());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}
BENCHMARK(BM_range_build)->Arg(100000)->Arg(1000000);

static void BM_range_select(benchmark::State& state) {
    uint64_t n = 1000000;
    std::vector<int64_t> a = random_array(n, 11);
    range_index ri = range_index::build(a);
    std::mt19937_64 rng(17);
    for (auto _ : state) {
        uint64_t i = 1 + rng() % n;
        uint64_t j = i + rng() % (n - i + 1);
        benchmark::DoNotOptimize(ri.range_select(i, j, 1 + rng() % (j - i + 1)));
    }
}
BENCHMARK(BM_range_select);

static void BM_range_successor(benchmark::State& state) {
    uint64_t n = 1000000;
    std::vector<int64_t> a = random_array(n, 11);
    range_index ri = range_index::build(a);
    std::mt19937_64 rng(17);
    for (auto _ : state) {
        uint64_t i = 1 + rng() % n;
        uint64_t j = i + rng() % (n - i + 1);
        benchmark::DoNotOptimize(ri.range_successor(i, j, int64_t(rng() % n)));
    }
}
BENCHMARK(BM_range_successor);

static void BM_successor_batch(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    std::vector<int64_t> a = random_array(n, 11);
    std::mt19937_64 rng(17);
    std::vector<successor_query> qs(n);
    for (auto& q : qs) {
        q.i = 1 + rng() % n;
        q.j = q.i + rng() % (n - q.i + 1);
        q.c = int64_t(rng() % n);
    }
    for (auto _ : state) {
        auto got = range_successor_batch(a, qs);
        benchmark::DoNotOptimize(got.size());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}
BENCHMARK(BM_successor_batch)->Arg(100000)->Arg(1000000);
