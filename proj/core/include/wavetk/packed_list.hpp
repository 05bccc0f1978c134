#ifndef WAVETK_PACKED_LIST_HPP
#define WAVETK_PACKED_LIST_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace wavetk {

// Fixed-width integers packed back to back into 64-bit words, entry i at bits
// [i*width, (i+1)*width) counting from the low end of the word sequence.
// All bits past size()*width_bits() are kept zero, so whole-word splicing is
// valid without masking.
class packed_list {
public:
    packed_list() = default;

    explicit packed_list(uint32_t width_bits) : width_(width_bits) {
        check_width(width_bits);
    }

    static packed_list pack(std::span<const uint64_t> values, uint32_t width_bits);

    uint32_t width_bits() const { return width_; }
    uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    uint64_t bit_size() const { return size_ * width_; }

    // Entries are 0-based.
    uint64_t get(uint64_t i) const { return read_bits(i * width_, width_); }

    void push_back(uint64_t v);

    // Splices `other` onto the end word by word; cost is proportional to the
    // word count of `other`, not its entry count.
    void append(const packed_list& other);

    // Appends `count` already-packed entries held in the low count*width bits.
    void append_entries(uint64_t bits, uint32_t count);

    // Raw bit access helpers shared with the construction code.
    uint64_t read_bits(uint64_t bit_pos, uint32_t nbits) const;
    void append_bits(uint64_t bits, uint32_t nbits);

    // ORs `lane_bit` into every entry. Used when a high digit is prepended to
    // all characters of a packed digit string at once.
    void or_bit_in_every_entry(uint32_t lane_bit);

    std::vector<uint64_t> unpack() const;

    const std::vector<uint64_t>& words() const { return words_; }

    void clear() {
        size_ = 0;
        words_.clear();
    }

    bool operator==(const packed_list& o) const {
        return width_ == o.width_ && size_ == o.size_ && words_ == o.words_;
    }

    // Restores a list from its raw parts (deserialization).
    static packed_list from_raw(uint32_t width_bits, uint64_t size, std::vector<uint64_t> words);

private:
    static void check_width(uint32_t w) {
        if (w < 1 || w > 63)
            throw std::invalid_argument("packed_list: width_bits must be in [1, 63]");
    }

    uint64_t size_ = 0;
    uint32_t width_ = 1;
    std::vector<uint64_t> words_;
};

// Plain bitmask; trailing bits beyond size() are zero. Bit positions in this
// class are 0-based; the rank/select layer on top speaks the 1-based language
// of the query contracts.
class bit_vector {
public:
    bit_vector() = default;

    explicit bit_vector(uint64_t nbits, bool fill = false);

    uint64_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(uint64_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void push_back(bool v);
    void append_bits(uint64_t bits, uint32_t nbits);

    const std::vector<uint64_t>& words() const { return words_; }

    uint64_t count_ones() const;

    bool operator==(const bit_vector& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

    static bit_vector from_raw(uint64_t nbits, std::vector<uint64_t> words);

private:
    uint64_t n_ = 0;
    std::vector<uint64_t> words_;
};

// Result of splitting a packed list on one bit position (most significant bit
// first: t = 0 selects the top bit of each entry).
struct bit_partition {
    packed_list zeros;
    packed_list ones;
    bit_vector bits;
};

// Splits `list` by the t-th most significant bit of each entry, preserving
// order on both sides. Entries are processed in table-driven chunks, not one
// bit at a time.
bit_partition partition_by_bit(const packed_list& list, uint32_t t);

} // namespace wavetk

#endif
