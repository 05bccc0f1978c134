#include "wavetk/packed_list.hpp"
#include "wavetk/rank_select.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wavetk;

namespace {

bit_vector random_bits(uint64_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    bit_vector b(n);
    for (uint64_t w = 0; w * 64 < n; ++w)
        for (uint64_t i = w * 64; i < std::min(n, (w + 1) * 64); ++i)
            b.set(i, rng() & 1);
    return b;
}

} // namespace

static void BM_rank1(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    rank_select rs(random_bits(n, 7));
    std::mt19937_64 rng(13);
    for (auto _ : state)
        benchmark::DoNotOptimize(rs.rank1(rng() % (n + 1)));
}
BENCHMARK(BM_rank1)->Range(1 << 10, 1 << 22);

static void BM_select1(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    rank_select rs(random_bits(n, 7));
    std::mt19937_64 rng(13);
    for (auto _ : state)
        benchmark::DoNotOptimize(rs.select1(1 + rng() % rs.ones()));
}
BENCHMARK(BM_select1)->Range(1 << 10, 1 << 22);

static void BM_partition_by_bit(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    std::mt19937_64 rng(5);
    std::vector<uint64_t> vals(n);
    for (auto& v : vals)
        v = rng() & 15;
    packed_list l = packed_list::pack(vals, 4);
    for (auto _ : state) {
        bit_partition p = partition_by_bit(l, 1);
        benchmark::DoNotOptimize(p.zeros.size());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}
BENCHMARK(BM_partition_by_bit)->Range(1 << 10, 1 << 20);
