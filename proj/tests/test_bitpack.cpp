#include "doctest.h"

#include "wavetk/chunk_tables.hpp"
#include "wavetk/packed_list.hpp"
#include "wavetk/rank_select.hpp"

#include <random>
#include <vector>

using namespace wavetk;

namespace {

// The 16-symbol string of the worked wavelet-tree example.
const std::vector<uint64_t> kExample = {12, 7, 11, 15, 9, 6, 4, 0, 1, 2, 10, 3, 13, 5, 8, 14};

bit_vector bits_from_string(const char* s) {
    bit_vector b;
    for (const char* p = s; *p; ++p)
        b.push_back(*p == '1');
    return b;
}

std::string bits_to_string(const bit_vector& b) {
    std::string s;
    for (uint64_t i = 0; i < b.size(); ++i)
        s += b.get(i) ? '1' : '0';
    return s;
}

} // namespace

TEST_SUITE("packed_list") {
    TEST_CASE("pack round trip") {
        packed_list empty = packed_list::pack({}, 4);
        CHECK(empty.size() == 0);

        packed_list small = packed_list::pack(std::vector<uint64_t>{12, 7, 11}, 4);
        CHECK(small.get(0) == 12);
        CHECK(small.get(2) == 11);

        packed_list fig = packed_list::pack(kExample, 4);
        CHECK(fig.size() == 16);
        CHECK(fig.unpack() == kExample);
    }

    TEST_CASE("pack rejects out-of-width values") {
        CHECK_THROWS_AS(packed_list::pack(std::vector<uint64_t>{16}, 4), std::invalid_argument);
        CHECK_THROWS_AS(packed_list(0), std::invalid_argument);
    }

    TEST_CASE("pack/unpack identity on random widths") {
        std::mt19937_64 rng(7);
        for (int round = 0; round < 50; ++round) {
            uint32_t width = 1 + uint32_t(rng() % 63);
            std::vector<uint64_t> vals(rng() % 200);
            for (auto& v : vals)
                v = rng() & ((width == 64 ? ~uint64_t(0) : (uint64_t(1) << width) - 1));
            packed_list l = packed_list::pack(vals, width);
            CHECK(l.unpack() == vals);
        }
    }

    TEST_CASE("append matches entry-by-entry copy") {
        packed_list a = packed_list::pack({}, 4);
        packed_list b = packed_list::pack(std::vector<uint64_t>{1, 2, 3}, 4);
        a.append(b);
        CHECK(a.unpack() == std::vector<uint64_t>{1, 2, 3});

        packed_list c = packed_list::pack(std::vector<uint64_t>{1, 2}, 4);
        c.append(packed_list::pack(std::vector<uint64_t>{3}, 4));
        CHECK(c.unpack() == std::vector<uint64_t>{1, 2, 3});

        // Word-unaligned splice: 13 then 9 entries of width 3.
        std::mt19937_64 rng(11);
        std::vector<uint64_t> u(13), v(9);
        for (auto& x : u)
            x = rng() % 8;
        for (auto& x : v)
            x = rng() % 8;
        packed_list lu = packed_list::pack(u, 3);
        packed_list lv = packed_list::pack(v, 3);
        lu.append(lv);
        std::vector<uint64_t> expect = u;
        expect.insert(expect.end(), v.begin(), v.end());
        CHECK(lu.size() == 22);
        CHECK(lu.unpack() == expect);

        CHECK_THROWS_AS(lu.append(packed_list::pack({}, 5)), std::invalid_argument);
    }

    TEST_CASE("append cost is word-level") {
        // Random widths and lengths against the trivial copy oracle.
        std::mt19937_64 rng(3);
        for (int round = 0; round < 40; ++round) {
            uint32_t width = 1 + uint32_t(rng() % 17);
            std::vector<uint64_t> u(rng() % 120), v(rng() % 120);
            for (auto& x : u)
                x = rng() & ((uint64_t(1) << width) - 1);
            for (auto& x : v)
                x = rng() & ((uint64_t(1) << width) - 1);
            packed_list a = packed_list::pack(u, width);
            a.append(packed_list::pack(v, width));
            std::vector<uint64_t> expect = u;
            expect.insert(expect.end(), v.begin(), v.end());
            CHECK(a.unpack() == expect);
        }
    }
}

TEST_SUITE("partition_by_bit") {
    TEST_CASE("examples") {
        packed_list l = packed_list::pack(std::vector<uint64_t>{12, 7, 11}, 4);
        bit_partition p = partition_by_bit(l, 0);
        CHECK(p.zeros.unpack() == std::vector<uint64_t>{7});
        CHECK(p.ones.unpack() == std::vector<uint64_t>{12, 11});
        CHECK(bits_to_string(p.bits) == "101");

        bit_partition root = partition_by_bit(packed_list::pack(kExample, 4), 0);
        CHECK(bits_to_string(root.bits) == "1011100000101011");

        CHECK_THROWS_AS(partition_by_bit(l, 4), std::invalid_argument);
    }

    TEST_CASE("constant lists keep one side empty") {
        std::vector<uint64_t> vals(37, 5); // bit 1 of 101 is 0
        bit_partition p = partition_by_bit(packed_list::pack(vals, 3), 1);
        CHECK(p.zeros.size() == 37);
        CHECK(p.ones.size() == 0);
        CHECK(p.bits.count_ones() == 0);
    }

    TEST_CASE("matches per-entry scan on random lists") {
        std::mt19937_64 rng(42);
        for (int round = 0; round < 60; ++round) {
            uint32_t width = 1 + uint32_t(rng() % 18);
            uint32_t t = uint32_t(rng() % width);
            std::vector<uint64_t> vals(rng() % 300);
            for (auto& v : vals)
                v = rng() & ((uint64_t(1) << width) - 1);
            bit_partition p = partition_by_bit(packed_list::pack(vals, width), t);
            std::vector<uint64_t> zeros, ones;
            std::string bits;
            for (uint64_t v : vals) {
                bool b = (v >> (width - 1 - t)) & 1;
                (b ? ones : zeros).push_back(v);
                bits += b ? '1' : '0';
            }
            CHECK(p.zeros.unpack() == zeros);
            CHECK(p.ones.unpack() == ones);
            CHECK(bits_to_string(p.bits) == bits);

            // Interleaving both sides back by the flag bits restores the list.
            std::vector<uint64_t> rebuilt;
            uint64_t i0 = 0, i1 = 0;
            for (uint64_t i = 0; i < p.bits.size(); ++i)
                rebuilt.push_back(p.bits.get(i) ? p.ones.get(i1++) : p.zeros.get(i0++));
            CHECK(rebuilt == vals);
        }
    }

    TEST_CASE("chunk tables agree with naive bit handling, exhaustively") {
        for (uint32_t width : {1u, 2u, 3u, 5u, 8u, 12u}) {
            for (uint32_t t = 0; t < width; ++t) {
                const tables::partition_table& tab = tables::partition_for(width, t);
                uint32_t per = tab.entries_per_chunk;
                uint64_t domain = uint64_t(1) << (per * width);
                for (uint64_t chunk = 0; chunk < domain; ++chunk) {
                    uint16_t zeros = 0, ones = 0, flags = 0;
                    uint32_t zc = 0, oc = 0;
                    for (uint32_t e = 0; e < per; ++e) {
                        uint64_t v = (chunk >> (e * width)) & ((uint64_t(1) << width) - 1);
                        if ((v >> (width - 1 - t)) & 1) {
                            ones |= uint16_t(v << (oc++ * width));
                            flags |= uint16_t(1 << e);
                        } else {
                            zeros |= uint16_t(v << (zc++ * width));
                        }
                    }
                    const tables::partition_entry& got = tab.at[chunk];
                    REQUIRE(got.zeros == zeros);
                    REQUIRE(got.ones == ones);
                    REQUIRE(got.flags == flags);
                    REQUIRE(got.zero_count == zc);
                }
            }
        }
    }
}

TEST_SUITE("rank_select") {
    TEST_CASE("empty and trivial inputs") {
        rank_select empty(bit_vector{});
        CHECK(empty.rank1(0) == 0);
        CHECK_THROWS_AS(empty.select1(1), std::out_of_range);

        rank_select ones(bit_vector(100, true));
        for (uint64_t k = 1; k <= 100; ++k) {
            CHECK(ones.rank1(k) == k);
            CHECK(ones.select1(k) == k);
        }
        CHECK_THROWS_AS(ones.select0(1), std::out_of_range);
    }

    TEST_CASE("worked example root bitmask") {
        rank_select rs(bits_from_string("1011100000101011"));
        CHECK(rs.rank1(5) == 4);
        CHECK(rs.select1(3) == 4);
        CHECK(rs.rank0(16) == 8);
    }

    TEST_CASE("select positions") {
        rank_select rs(bits_from_string("0101"));
        CHECK(rs.select1(2) == 4);
        CHECK(rs.select0(2) == 3);
        CHECK_THROWS_AS(rs.select1(3), std::out_of_range);
        CHECK_THROWS_AS(rs.select1(0), std::out_of_range);
    }

    TEST_CASE("agrees with scan oracle on random bitmasks") {
        std::mt19937_64 rng(1234);
        for (double density : {0.02, 0.5, 0.97}) {
            uint64_t n = 10000;
            bit_vector b(n);
            std::vector<uint64_t> prefix(n + 1, 0);
            for (uint64_t i = 0; i < n; ++i) {
                bool bit = std::uniform_real_distribution<>(0, 1)(rng) < density;
                b.set(i, bit);
                prefix[i + 1] = prefix[i] + (bit ? 1 : 0);
            }
            rank_select rs(b);
            for (uint64_t i = 0; i <= n; ++i) {
                REQUIRE(rs.rank1(i) == prefix[i]);
                REQUIRE(rs.rank0(i) == i - prefix[i]);
            }
            for (uint64_t k = 1; k <= rs.ones(); ++k) {
                uint64_t pos = rs.select1(k);
                REQUIRE(prefix[pos] == k);
                REQUIRE(b.get(pos - 1));
                REQUIRE(rs.rank1(pos) == k); // rank/select duality
            }
            for (uint64_t k = 1; k <= rs.zeros(); ++k) {
                uint64_t pos = rs.select0(k);
                REQUIRE(pos - prefix[pos] == k);
                REQUIRE(!b.get(pos - 1));
            }
        }
    }

    TEST_CASE("sparse superblocks store their occurrence positions") {
        // Fewer than one select sample's worth of ones spread over a span
        // wider than the sparse threshold exercises the explicit-position
        // branch; the complementary vector does the same for select0.
        uint64_t n = 70000000;
        std::vector<uint64_t> positions;
        for (uint64_t p = 500000; p < n; p += 500000)
            positions.push_back(p);
        {
            bit_vector b(n);
            for (uint64_t p : positions)
                b.set(p, true);
            rank_select rs(b);
            REQUIRE(rs.ones() == positions.size());
            for (uint64_t k = 1; k <= positions.size(); ++k)
                REQUIRE(rs.select1(k) == positions[k - 1] + 1);
            CHECK(rs.rank1(n) == positions.size());
        }
        {
            bit_vector b(n, true);
            for (uint64_t p : positions)
                b.set(p, false);
            rank_select rs(b);
            REQUIRE(rs.zeros() == positions.size());
            for (uint64_t k = 1; k <= positions.size(); ++k)
                REQUIRE(rs.select0(k) == positions[k - 1] + 1);
        }
    }

    TEST_CASE("interval counts from rank differences") {
        std::mt19937_64 rng(99);
        uint64_t n = 4096;
        bit_vector b(n);
        for (uint64_t i = 0; i < n; ++i)
            b.set(i, rng() & 1);
        rank_select rs(b);
        for (int round = 0; round < 2000; ++round) {
            uint64_t i = rng() % (n + 1);
            uint64_t j = rng() % (n + 1);
            if (i > j)
                std::swap(i, j);
            uint64_t expect = 0;
            for (uint64_t p = i; p < j; ++p)
                expect += b.get(p);
            CHECK(rs.rank1(j) - rs.rank1(i) == expect);
        }
    }
}
