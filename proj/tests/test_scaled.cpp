#include "doctest.h"

#include "oracles.hpp"
#include "wavetk/scaled_index.hpp"

#include <random>

using namespace wavetk;

TEST_SUITE("scaled_index") {
    TEST_CASE("length table stays inside its window") {
        std::mt19937_64 rng(404);
        for (uint64_t n : {1ull, 5ull, 64ull, 65ull, 333ull, 5000ull, 10000ull}) {
            std::string w = oracle::random_string(rng(), n, 3);
            text_index ti = text_index::from_bytes(w);
            scaled_index idx(ti);
            for (uint64_t m = 1; m <= n; ++m) {
                uint64_t s = idx.scale_for_length(m);
                REQUIRE(s >= std::min(2 * m, n));
                REQUIRE(s <= 2 * (m + 1) * (m + 1));
            }
        }
    }

    TEST_CASE("whole-string queries fall back to the top scale") {
        std::string w = oracle::random_string(3, 500, 3);
        text_index ti = text_index::from_bytes(w);
        scaled_index idx(ti);
        CHECK(idx.scale_for_length(w.size()) == w.size());
        CHECK(idx.covering_window({1, w.size()}) == substr{1, w.size()});
        wavelet_suffix_tree full(ti);
        substr x{1, w.size()};
        for (uint64_t k = 1; k <= x.size(); k += 37)
            CHECK(idx.suffix_select(x, k) == full.suffix_select(x, k));
    }

    TEST_CASE("every covering window is small enough") {
        std::string w = oracle::random_string(11, 3000, 2);
        text_index ti = text_index::from_bytes(w);
        scaled_index idx(ti);
        std::mt19937_64 rng(5);
        for (int round = 0; round < 2000; ++round) {
            uint64_t i = 1 + rng() % w.size();
            uint64_t j = i + rng() % (w.size() - i + 1);
            substr v = idx.covering_window({i, j});
            REQUIRE(v.lo <= i);
            REQUIRE(v.hi >= j);
            uint64_t m = j - i + 1;
            REQUIRE(v.size() <= 2 * (m + 1) * (m + 1));
        }
    }

    TEST_CASE("answers equal the full tree across scales") {
        std::mt19937_64 rng(2026);
        std::string w = oracle::random_string(21, 2500, 4);
        text_index ti = text_index::from_bytes(w);
        wavelet_suffix_tree full(ti);
        scaled_index idx(ti);
        for (int round = 0; round < 1000; ++round) {
            // Mix of tiny (naive path), medium and large substrings.
            uint64_t m;
            switch (round % 3) {
            case 0: m = 1 + rng() % 3; break;
            case 1: m = 4 + rng() % 60; break;
            default: m = 1 + rng() % w.size();
            }
            m = std::min<uint64_t>(m, w.size());
            uint64_t i = 1 + rng() % (w.size() - m + 1);
            substr x{i, i + m - 1};
            uint64_t c = 1 + rng() % w.size();
            uint64_t d = c + rng() % (w.size() - c + 1);
            substr y{c, d};
            REQUIRE(idx.suffix_rank(x, y) == full.suffix_rank(x, y));
            uint64_t k = 1 + rng() % x.size();
            REQUIRE(idx.suffix_select(x, k) == full.suffix_select(x, k));
            REQUIRE(idx.bwt_rle(x) == full.bwt_rle(x));
        }
    }
}
