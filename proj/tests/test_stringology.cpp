#include "doctest.h"

#include "oracles.hpp"
#include "wavetk/periodic.hpp"
#include "wavetk/text_index.hpp"

#include <random>

using namespace wavetk;

namespace {

// Renders a handle over w$ with the sentinel as byte 0 for scan oracles.
std::string handle_str(const std::string& w, substr h) {
    std::string s;
    for (uint64_t p = h.lo; p <= h.hi && !h.empty(); ++p)
        s += p == w.size() + 1 ? char(0) : w[p - 1];
    return s;
}

substr find_handle(const std::string& w, const std::string& needle) {
    size_t at = w.find(needle);
    REQUIRE(at != std::string::npos);
    return {at + 1, at + needle.size()};
}

} // namespace

TEST_SUITE("text_index") {
    TEST_CASE("suffix order of small strings") {
        text_index a = text_index::from_bytes("a");
        CHECK(a.sa(1) == 2); // "$"
        CHECK(a.sa(2) == 1); // "a$"

        text_index banana = text_index::from_bytes("banana");
        CHECK(banana.sa(1) == 7);
        CHECK(banana.sa(2) == 6);
        CHECK(banana.sa(3) == 4);
        CHECK(banana.sa(4) == 2);

        text_index fig = text_index::from_bytes("ababbabababb");
        CHECK(fig.sa(1) == 13); // the bare sentinel sorts first
    }

    TEST_CASE("suffix array is a sorted permutation, random inputs") {
        std::mt19937_64 rng(555);
        for (int round = 0; round < 25; ++round) {
            std::string w = oracle::random_string(rng(), 1 + rng() % 200, 1 + rng() % 4);
            text_index ti = text_index::from_bytes(w);
            std::vector<bool> seen(w.size() + 2, false);
            for (uint64_t r = 1; r <= w.size() + 1; ++r) {
                REQUIRE(!seen[ti.sa(r)]);
                seen[ti.sa(r)] = true;
                REQUIRE(ti.rank_of(ti.sa(r)) == r);
                if (r > 1) {
                    std::string prev = handle_str(w, ti.suffix(ti.sa(r - 1)));
                    std::string cur = handle_str(w, ti.suffix(ti.sa(r)));
                    REQUIRE(prev < cur);
                    REQUIRE(ti.lcp_at(r) == oracle::scan_lcp(prev, cur));
                }
            }
        }
    }

    TEST_CASE("lcp and compare against character scans") {
        CHECK(text_index::from_bytes("abab").lcp({1, 4}, {1, 4}) == 4); // lcp(x, x) = |x|

        text_index ti = text_index::from_bytes("ababba");
        substr x = {1, 4}; // abab
        substr y = {3, 6}; // abba
        CHECK(ti.lcp(x, y) == 2);
        CHECK(ti.compare(x, y) == -1);
        CHECK(ti.compare_trimmed(x, y, 2) == 0);
        CHECK(ti.compare_trimmed(x, y, 3) == -1);
        CHECK(ti.compare_trimmed(x, y, 6) == ti.compare(x, y)); // no-op trim

        std::mt19937_64 rng(99);
        std::string w = oracle::random_string(1, 2000, 3);
        text_index big = text_index::from_bytes(w);
        for (int round = 0; round < 20000; ++round) {
            uint64_t a = 1 + rng() % (w.size() + 1);
            uint64_t b = a + rng() % (w.size() + 2 - a);
            uint64_t c = 1 + rng() % (w.size() + 1);
            uint64_t d = c + rng() % (w.size() + 2 - c);
            substr hx{a, b}, hy{c, d};
            std::string sx = handle_str(w, hx), sy = handle_str(w, hy);
            REQUIRE(big.lcp(hx, hy) == oracle::scan_lcp(sx, sy));
            REQUIRE(big.compare(hx, hy) == oracle::scan_compare(sx, sy));
            uint64_t ell = 1 + rng() % (w.size() + 1);
            REQUIRE(big.compare_trimmed(hx, hy, ell) == oracle::scan_compare_trimmed(sx, sy, ell));
        }
        // The empty handle sits below everything non-empty.
        CHECK(big.compare({1, 0}, {1, 1}) == -1);
        CHECK(big.compare({1, 0}, {1, 0}) == 0);
    }

    TEST_CASE("lcp against powers") {
        text_index ti = text_index::from_bytes("abababab");
        substr x{1, 6}; // ababab
        substr y{1, 2}; // ab
        auto got = ti.lcp_with_power(x, y);
        CHECK(got.lcp == 6);
        CHECK(got.less); // a proper prefix of the power

        auto self = ti.lcp_with_power(y, y);
        CHECK(self.lcp == 2);
        CHECK(self.less);

        std::mt19937_64 rng(123);
        std::string w = oracle::random_string(77, 800, 2);
        text_index big = text_index::from_bytes(w);
        for (int round = 0; round < 20000; ++round) {
            uint64_t a = 1 + rng() % w.size();
            uint64_t b = a + rng() % (w.size() + 1 - a);
            uint64_t c = 1 + rng() % w.size();
            uint64_t d = c + rng() % (w.size() + 1 - c);
            substr hx{a, b}, hy{c, d};
            auto expect = oracle::scan_power(handle_str(w, hx), handle_str(w, hy));
            auto have = big.lcp_with_power(hx, hy);
            REQUIRE(have.lcp == expect.first);
            REQUIRE(have.less == expect.second);
        }
        CHECK_THROWS_AS(ti.lcp_with_power({1, 2}, {1, 0}), std::invalid_argument);
    }

    TEST_CASE("substring order matches naive sorting, exhaustively") {
        for (const char* wc : {"abaabbab", "aaaaaaaaaaaa", "abababababab", "abbaabbaabba"}) {
            std::string w = wc;
            text_index ti = text_index::from_bytes(w);
            std::vector<std::pair<std::string, substr>> subs;
            for (uint64_t i = 1; i <= w.size(); ++i)
                for (uint64_t j = i; j <= w.size(); ++j)
                    subs.push_back({handle_str(w, {i, j}), {i, j}});
            for (const auto& [sa, ha] : subs)
                for (const auto& [sb, hb] : subs)
                    REQUIRE(ti.compare(ha, hb) == oracle::scan_compare(sa, sb));
        }
    }
}

TEST_SUITE("occurrences") {
    TEST_CASE("examples") {
        std::string w = "abababaaaa";
        text_index ti = text_index::from_bytes(w);

        // A pattern occurring at itself only.
        substr x = find_handle(w, "ababab");
        auto self = occurrences(ti, x, x);
        REQUIRE(self.size() == 1);
        CHECK(self[0].start == x.lo);
        CHECK(self[0].count == 1);

        // "ab" in "ababab": one progression (1, 2, 3).
        auto ab = occurrences(ti, {1, 6}, {1, 2});
        REQUIRE(ab.size() == 1);
        CHECK(ab[0].start == 1);
        CHECK(ab[0].diff == 2);
        CHECK(ab[0].count == 3);

        // "aa" in "aaaa": one progression (7, 1, 3).
        auto aa = occurrences(ti, {7, 10}, {7, 8});
        REQUIRE(aa.size() == 1);
        CHECK(aa[0].start == 7);
        CHECK(aa[0].diff == 1);
        CHECK(aa[0].count == 3);

        CHECK(occurrences(ti, {1, 2}, {1, 6}).empty()); // window shorter than pattern
        CHECK_THROWS_AS(occurrences(ti, {1, 1}, {1, 0}), std::invalid_argument);
    }

    TEST_CASE("term sets, ordering and the progression bound") {
        std::mt19937_64 rng(31415);
        for (int round = 0; round < 4000; ++round) {
            std::string w = oracle::random_string(rng(), 40 + rng() % 160, 1 + rng() % 3);
            text_index ti = text_index::from_bytes(w);
            uint64_t yl = 1 + rng() % 8;
            uint64_t yo = 1 + rng() % (w.size() - yl + 1);
            uint64_t xo = 1 + rng() % w.size();
            uint64_t max_hi = std::min<uint64_t>(w.size(), xo + 3 * (yl + 1) - 2);
            uint64_t xh = xo + rng() % (max_hi - xo + 1);
            substr x{xo, xh}, y{yo, yo + yl - 1};

            auto progs = occurrences(ti, x, y);
            std::vector<uint64_t> terms;
            uint64_t prev_max = 0;
            for (const progression& p : progs) {
                REQUIRE(p.count >= 1);
                REQUIRE(p.start > prev_max); // non-overlapping, sorted
                prev_max = p.back();
                for (uint64_t t = 0; t < p.count; ++t)
                    terms.push_back(p.term(t));
                // The defining equality of a periodic progression: every
                // between-terms block matches the first one.
                for (uint64_t t = 1; t + 1 < p.count; ++t)
                    REQUIRE(ti.compare({p.term(t), p.term(t + 1) - 1},
                                       {p.term(0), p.term(1) - 1}) == 0);
            }
            REQUIRE(terms == oracle::scan_occurrences(w, xo, xh, w.substr(yo - 1, yl)));
            uint64_t bound = (x.size() + 1 + y.size()) / (y.size() + 1); // ceil((|x|+1)/(|y|+1))
            REQUIRE(progs.size() <= bound);
        }
    }
}

TEST_SUITE("filter_progression") {
    TEST_CASE("full and empty intervals") {
        std::string w = "abaabaabaaba";
        text_index ti = text_index::from_bytes(w);
        auto occ = occurrences(ti, {1, 12}, {1, 3}); // "aba" every 3
        REQUIRE(occ.size() == 1);
        progression p = occ[0];
        REQUIRE(p.count == 4);

        // The full interval keeps everything.
        string_interval full{{1, 0}, ti.suffix(ti.sa(ti.n() + 1)), 1, false, false};
        filter_result kept = filter_progression(ti, p, 12, full);
        CHECK(kept.kept.count == p.count);
        CHECK(kept.index_lo == 0);
        CHECK(kept.index_hi == p.count);

        // An empty interval (high below low) keeps nothing.
        string_interval empty{ti.suffix(ti.sa(ti.n() + 1)), {1, 0}, 1, false, false};
        CHECK(filter_progression(ti, p, 12, empty).kept.empty());
    }

    TEST_CASE("against the per-term membership oracle") {
        std::mt19937_64 rng(2718);
        int interesting = 0;
        for (int round = 0; round < 12000; ++round) {
            std::string w = oracle::random_string(rng(), 30 + rng() % 120, 1 + rng() % 2);
            text_index ti = text_index::from_bytes(w);
            uint64_t n = w.size();
            uint64_t yl = 1 + rng() % 5;
            uint64_t yo = 1 + rng() % (n - yl + 1);
            uint64_t xo = 1 + rng() % n;
            uint64_t xh = std::min(n, xo + 3 * (yl + 1) - 2);
            auto progs = occurrences(ti, {xo, xh}, {yo, yo + yl - 1});
            if (progs.empty())
                continue;
            progression p = progs[rng() % progs.size()];
            uint64_t j = p.back() + rng() % (n + 2 - p.back());

            uint64_t al = 1 + rng() % (n + 1);
            uint64_t ah = al + rng() % (n + 2 - al);
            uint64_t bl = 1 + rng() % (n + 1);
            uint64_t bh = bl + rng() % (n + 2 - bl);
            string_interval iv{{al, ah}, {bl, bh}, 1 + rng() % (n + 1), bool(rng() & 1),
                               bool(rng() & 1)};
            filter_result got = filter_progression(ti, p, j, iv);
            std::vector<uint64_t> expect;
            for (uint64_t t = 0; t < p.count; ++t)
                if (interval_contains(ti, iv, {p.term(t), j}))
                    expect.push_back(p.term(t));
            std::vector<uint64_t> have = got.kept.terms();
            REQUIRE(have == expect);
            if (p.count >= 3 && !expect.empty())
                ++interesting;
        }
        CHECK(interesting > 50); // the generator did hit non-trivial cases
    }
}
