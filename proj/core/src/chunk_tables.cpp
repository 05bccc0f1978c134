#include "wavetk/chunk_tables.hpp"

#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace wavetk::tables {

namespace {

std::array<uint8_t, 65536> build_popcount16() {
    std::array<uint8_t, 65536> t{};
    for (uint32_t v = 0; v < 65536; ++v)
        t[v] = uint8_t(std::popcount(v));
    return t;
}

// For each 16-bit value, the positions of its set bits packed 4 bits apiece,
// k-th occurrence in nibble k-1.
std::vector<uint64_t> build_select16() {
    std::vector<uint64_t> t(65536, 0);
    for (uint32_t v = 0; v < 65536; ++v) {
        uint64_t packed = 0;
        uint32_t k = 0;
        for (uint32_t bit = 0; bit < 16; ++bit) {
            if ((v >> bit) & 1) {
                packed |= uint64_t(bit) << (4 * k);
                ++k;
            }
        }
        t[v] = packed;
    }
    return t;
}

const std::vector<uint64_t>& select16_table() {
    static const std::vector<uint64_t> t = build_select16();
    return t;
}

std::unique_ptr<partition_table> build_partition(uint32_t width, uint32_t bit) {
    auto tab = std::make_unique<partition_table>();
    tab->width = width;
    tab->bit = bit;
    tab->entries_per_chunk = kChunkBits / width;
    uint32_t per = tab->entries_per_chunk;
    uint64_t domain = uint64_t(1) << (per * width);
    tab->at.resize(domain);
    for (uint64_t chunk = 0; chunk < domain; ++chunk) {
        partition_entry e{0, 0, 0, 0};
        uint32_t one_count = 0;
        for (uint32_t j = 0; j < per; ++j) {
            uint64_t v = (chunk >> (j * width)) & ((uint64_t(1) << width) - 1);
            bool flag = (v >> (width - 1 - bit)) & 1;
            if (flag) {
                e.ones |= uint16_t(v << (one_count * width));
                e.flags |= uint16_t(1u << j);
                ++one_count;
            } else {
                e.zeros |= uint16_t(v << (e.zero_count * width));
                ++e.zero_count;
            }
        }
        tab->at[chunk] = e;
    }
    return tab;
}

std::unique_ptr<genrank_table> build_genrank(uint32_t digit_bits) {
    auto tab = std::make_unique<genrank_table>();
    tab->digit_bits = digit_bits;
    tab->degree = 1u << digit_bits;
    tab->entries_per_chunk = kChunkBits / digit_bits;
    uint32_t per = tab->entries_per_chunk;
    uint64_t domain = uint64_t(1) << (per * digit_bits);
    tab->counts.resize(domain * tab->degree);
    for (uint64_t chunk = 0; chunk < domain; ++chunk) {
        for (uint32_t c = 0; c < tab->degree; ++c) {
            uint32_t cnt = 0;
            for (uint32_t j = 0; j < per; ++j) {
                uint64_t v = (chunk >> (j * digit_bits)) & (tab->degree - 1);
                if (v <= c)
                    ++cnt;
            }
            tab->counts[chunk * tab->degree + c] = uint8_t(cnt);
        }
    }
    return tab;
}

} // namespace

const std::array<uint8_t, 65536>& popcount16() {
    static const std::array<uint8_t, 65536> t = build_popcount16();
    return t;
}

uint32_t select16(uint16_t chunk, uint32_t k) {
    return uint32_t(select16_table()[chunk] >> (4 * (k - 1))) & 15u;
}

uint32_t select_in_word(uint64_t w, uint32_t k) {
    const auto& pc = popcount16();
    for (uint32_t part = 0; part < 4; ++part) {
        uint16_t chunk = uint16_t(w >> (16 * part));
        uint32_t c = pc[chunk];
        if (k <= c)
            return 16 * part + select16(chunk, k);
        k -= c;
    }
    throw std::out_of_range("select_in_word: not enough set bits");
}

const partition_table& partition_for(uint32_t width, uint32_t bit) {
    if (width < 1 || width > kChunkBits || bit >= width)
        throw std::invalid_argument("partition_for: bad width/bit");
    static std::mutex mu;
    static std::unique_ptr<partition_table> cache[kChunkBits + 1][kChunkBits];
    auto& slot = cache[width][bit];
    {
        std::scoped_lock lock(mu);
        if (!slot)
            slot = build_partition(width, bit);
    }
    return *slot;
}

const genrank_table& genrank_for(uint32_t digit_bits) {
    if (digit_bits < 1 || digit_bits > 8)
        throw std::invalid_argument("genrank_for: digit_bits must be in [1, 8]");
    static std::mutex mu;
    static std::unique_ptr<genrank_table> cache[9];
    auto& slot = cache[digit_bits];
    {
        std::scoped_lock lock(mu);
        if (!slot)
            slot = build_genrank(digit_bits);
    }
    return *slot;
}

} // namespace wavetk::tables
