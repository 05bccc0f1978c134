#include "wavetk/scaled_index.hpp"
#include "wavetk/wavelet_suffix_tree.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wavetk;

namespace {

std::vector<uint32_t> random_text(uint64_t n, uint32_t sigma, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> t(n);
    for (auto& c : t)
        c = uint32_t(rng() % sigma);
    return t;
}

} // namespace

static void BM_wst_build(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    std::vector<uint32_t> text = random_text(n, 4, 23);
    for (auto _ : state) {
        text_index ti(text);
        wavelet_suffix_tree wst(ti);
        benchmark::DoNotOptimize(wst.height());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n));
}
BENCHMARK(BM_wst_build)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_wst_suffix_rank(benchmark::State& state) {
    uint64_t n = 100000;
    std::vector<uint32_t> text = random_text(n, 4, 23);
    text_index ti(text);
    wavelet_suffix_tree wst(ti);
    std::mt19937_64 rng(29);
    for (auto _ : state) {
        uint64_t i = 1 + rng() % n;
        uint64_t j = i + rng() % (n - i + 1);
        uint64_t c = 1 + rng() % n;
        uint64_t d = c + rng() % (n - c + 1);
        benchmark::DoNotOptimize(wst.suffix_rank({i, j}, substr{c, d}));
    }
}
BENCHMARK(BM_wst_suffix_rank);

static void BM_wst_suffix_select(benchmark::State& state) {
    uint64_t n = 100000;
    std::vector<uint32_t> text = random_text(n, 4, 23);
    text_index ti(text);
    wavelet_suffix_tree wst(ti);
    std::mt19937_64 rng(29);
    for (auto _ : state) {
        uint64_t i = 1 + rng() % n;
        uint64_t j = i + rng() % (n - i + 1);
        benchmark::DoNotOptimize(wst.suffix_select({i, j}, 1 + rng() % (j - i + 1)));
    }
}
BENCHMARK(BM_wst_suffix_select);

static void BM_wst_bwt_short(benchmark::State& state) {
    // Short windows keep the run count, and so the work, small.
    uint64_t n = 100000;
    std::vector<uint32_t> text = random_text(n, 4, 23);
    text_index ti(text);
    wavelet_suffix_tree wst(ti);
    std::mt19937_64 rng(29);
    for (auto _ : state) {
        uint64_t len = 1 + rng() % 64;
        uint64_t i = 1 + rng() % (n - len);
        benchmark::DoNotOptimize(wst.bwt_rle({i, i + len - 1}).size());
    }
}
BENCHMARK(BM_wst_bwt_short);

static void BM_scaled_build(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    std::vector<uint32_t> text = random_text(n, 4, 23);
    text_index ti(text);
    for (auto _ : state) {
        scaled_index idx(ti);
        benchmark::DoNotOptimize(idx.ladder().size());
    }
}
BENCHMARK(BM_scaled_build)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_scaled_select_short(benchmark::State& state) {
    uint64_t n = 100000;
    std::vector<uint32_t> text = random_text(n, 4, 23);
    text_index ti(text);
    scaled_index idx(ti);
    std::mt19937_64 rng(29);
    for (auto _ : state) {
        uint64_t len = 1 + rng() % 32;
        uint64_t i = 1 + rng() % (n - len);
        substr x{i, i + len - 1};
        benchmark::DoNotOptimize(idx.suffix_select(x, 1 + rng() % x.size()));
    }
}
BENCHMARK(BM_scaled_select_short);
