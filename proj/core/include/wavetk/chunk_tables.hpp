#ifndef WAVETK_CHUNK_TABLES_HPP
#define WAVETK_CHUNK_TABLES_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace wavetk::tables {

// All lookup tables operate on fixed 16-bit chunks and are built once per
// process on first use; every structure instance shares them.
inline constexpr uint32_t kChunkBits = 16;

const std::array<uint8_t, 65536>& popcount16();

// Position (0-based, from the low end) of the k-th set bit of a 16-bit chunk,
// k being 1-based. Undefined for k > popcount.
uint32_t select16(uint16_t chunk, uint32_t k);

// Position of the k-th set bit of a full word, k in [1, popcount(w)].
uint32_t select_in_word(uint64_t w, uint32_t k);

// Chunk-driven splitting of packed b-bit entries on one bit position.
struct partition_entry {
    uint16_t zeros;     // packed entries whose selected bit is 0
    uint16_t ones;      // packed entries whose selected bit is 1
    uint16_t flags;     // the selected bits, entry order, low bit first
    uint8_t zero_count;
};

struct partition_table {
    uint32_t width = 0;
    uint32_t bit = 0;
    uint32_t entries_per_chunk = 0;
    std::vector<partition_entry> at; // indexed by the packed chunk value
};

// width in [1, 16], bit in [0, width).
const partition_table& partition_for(uint32_t width, uint32_t bit);

// Counting table for generalized rank over packed digit strings: for a chunk
// of entries_per_chunk digits, count_le(chunk, c) is the number of digits <= c.
struct genrank_table {
    uint32_t digit_bits = 0;
    uint32_t degree = 0;
    uint32_t entries_per_chunk = 0;
    std::vector<uint8_t> counts; // [chunk * degree + c]

    uint32_t count_le(uint64_t chunk, uint32_t c) const {
        return counts[chunk * degree + c];
    }
};

// digit_bits in [1, 8]; degree = 1 << digit_bits.
const genrank_table& genrank_for(uint32_t digit_bits);

} // namespace wavetk::tables

#endif
