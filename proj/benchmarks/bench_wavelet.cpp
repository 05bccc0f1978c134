#include "wavetk/digit_tree.hpp"
#include "wavetk/wavelet_tree.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wavetk;

static void BM_wavelet_build(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    uint64_t sigma = uint64_t(state.range(1));
    std::mt19937_64 rng(3);
    std::vector<uint64_t> s(n);
    for (auto& v : s)
        v = rng() % sigma;
    packed_list packed = packed_list::pack(s, std::max<uint32_t>(1, ceil_log2(sigma)));
    for (auto _ : state) {
        wavelet_tree wt = wavelet_tree::build(packed, sigma);
        benchmark::DoNotOptimize(wt.height());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}
BENCHMARK(BM_wavelet_build)
    ->Args({100000, 256})
    ->Args({1000000, 256})
    ->Args({1000000, 65536})
    ->Args({4000000, 256});

static void BM_wavelet_build_tau1(benchmark::State& state) {
    // The stride-1 special case exercises the pure chunk-splitting path.
    uint64_t n = uint64_t(state.range(0));
    std::mt19937_64 rng(3);
    std::vector<uint64_t> s(n);
    for (auto& v : s)
        v = rng() % 256;
    packed_list packed = packed_list::pack(s, 8);
    wavelet_build_options opts;
    opts.tau = 1;
    for (auto _ : state) {
        wavelet_tree wt = wavelet_tree::build(packed, 256, opts);
        benchmark::DoNotOptimize(wt.height());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}
BENCHMARK(BM_wavelet_build_tau1)->Arg(1000000);

static void BM_wavelet_access(benchmark::State& state) {
    uint64_t n = 1000000;
    std::mt19937_64 rng(3);
    std::vector<uint64_t> s(n);
    for (auto& v : s)
        v = rng() % 256;
    wavelet_tree wt = wavelet_tree::build(s, 256);
    for (auto _ : state)
        benchmark::DoNotOptimize(wt.access(1 + rng() % n));
}
BENCHMARK(BM_wavelet_access);

static void BM_digit_tree_build(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    std::mt19937_64 rng(3);
    std::vector<uint64_t> s(n);
    for (auto& v : s)
        v = rng() % 4096;
    wavelet_tree wt = wavelet_tree::build(s, 4096);
    for (auto _ : state) {
        digit_tree dt = digit_tree::build(wt, 8);
        benchmark::DoNotOptimize(dt.level_count());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}
BENCHMARK(BM_digit_tree_build)->Arg(1000000);
