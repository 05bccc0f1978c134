#include "wavetk/packed_list.hpp"

#include "wavetk/chunk_tables.hpp"

#include <bit>
#include <string>

namespace wavetk {

namespace {

inline uint64_t low_mask(uint32_t nbits) {
    return nbits >= 64 ? ~uint64_t(0) : (uint64_t(1) << nbits) - 1;
}

// Appends `nbits` (<= 64) from `bits` to a word vector whose logical length is
// `cur_bits`. The tail of the vector must already be zero.
inline void raw_append(std::vector<uint64_t>& words, uint64_t cur_bits, uint64_t bits, uint32_t nbits) {
    if (nbits == 0)
        return;
    bits &= low_mask(nbits);
    uint64_t word = cur_bits >> 6;
    uint32_t off = cur_bits & 63;
    uint64_t need = (cur_bits + nbits + 63) >> 6;
    if (words.size() < need)
        words.resize(need, 0);
    words[word] |= bits << off;
    if (off != 0 && off + nbits > 64)
        words[word + 1] |= bits >> (64 - off);
}

inline uint64_t raw_read(const std::vector<uint64_t>& words, uint64_t bit_pos, uint32_t nbits) {
    if (nbits == 0)
        return 0;
    uint64_t word = bit_pos >> 6;
    uint32_t off = bit_pos & 63;
    uint64_t v = words[word] >> off;
    if (off != 0 && off + nbits > 64)
        v |= words[word + 1] << (64 - off);
    return v & low_mask(nbits);
}

} // namespace

packed_list packed_list::pack(std::span<const uint64_t> values, uint32_t width_bits) {
    packed_list out(width_bits);
    out.words_.reserve((values.size() * width_bits + 63) / 64);
    for (uint64_t v : values)
        out.push_back(v);
    return out;
}

void packed_list::push_back(uint64_t v) {
    if (width_ < 64 && (v >> width_) != 0)
        throw std::invalid_argument("packed_list: value " + std::to_string(v) +
                                    " does not fit in " + std::to_string(width_) + " bits");
    raw_append(words_, size_ * width_, v, width_);
    ++size_;
}

void packed_list::append(const packed_list& other) {
    if (width_ != other.width_)
        throw std::invalid_argument("packed_list: append width mismatch");
    if (other.size_ == 0)
        return;
    uint64_t cur_bits = size_ * width_;
    uint64_t add_bits = other.size_ * width_;
    uint64_t need = (cur_bits + add_bits + 63) >> 6;
    words_.reserve(need);
    uint64_t full_words = add_bits >> 6;
    for (uint64_t w = 0; w < full_words; ++w)
        raw_append(words_, cur_bits + w * 64, other.words_[w], 64);
    uint32_t tail = add_bits & 63;
    if (tail)
        raw_append(words_, cur_bits + full_words * 64, other.words_[full_words], tail);
    size_ += other.size_;
}

void packed_list::append_entries(uint64_t bits, uint32_t count) {
    raw_append(words_, size_ * width_, bits, count * width_);
    size_ += count;
}

uint64_t packed_list::read_bits(uint64_t bit_pos, uint32_t nbits) const {
    return raw_read(words_, bit_pos, nbits);
}

void packed_list::append_bits(uint64_t bits, uint32_t nbits) {
    raw_append(words_, size_ * width_, bits, nbits);
}

void packed_list::or_bit_in_every_entry(uint32_t lane_bit) {
    if (size_ == 0)
        return;
    // Entry boundaries drift across words unless width divides 64, so the OR
    // pattern is regenerated per word from the running bit offset.
    uint64_t total = size_ * width_;
    for (uint64_t w = 0, base = 0; w * 64 < total; ++w, base += 64) {
        uint64_t mask = 0;
        // First entry that overlaps this word.
        uint64_t e = base / width_;
        for (uint64_t bit = e * width_ + lane_bit; bit < base + 64; bit += width_) {
            if (bit >= base && bit < total)
                mask |= uint64_t(1) << (bit - base);
        }
        words_[w] |= mask;
    }
}

std::vector<uint64_t> packed_list::unpack() const {
    std::vector<uint64_t> out(size_);
    for (uint64_t i = 0; i < size_; ++i)
        out[i] = get(i);
    return out;
}

packed_list packed_list::from_raw(uint32_t width_bits, uint64_t size, std::vector<uint64_t> words) {
    packed_list out(width_bits);
    uint64_t need = (size * width_bits + 63) / 64;
    if (words.size() != need)
        throw std::invalid_argument("packed_list: raw word count does not match size");
    out.size_ = size;
    out.words_ = std::move(words);
    return out;
}

bit_vector::bit_vector(uint64_t nbits, bool fill) : n_(nbits), words_((nbits + 63) / 64, fill ? ~uint64_t(0) : 0) {
    if (fill && (n_ & 63))
        words_.back() &= low_mask(n_ & 63);
}

void bit_vector::push_back(bool v) {
    raw_append(words_, n_, v ? 1 : 0, 1);
    ++n_;
}

void bit_vector::append_bits(uint64_t bits, uint32_t nbits) {
    raw_append(words_, n_, bits, nbits);
    n_ += nbits;
}

uint64_t bit_vector::count_ones() const {
    uint64_t c = 0;
    for (uint64_t w : words_)
        c += std::popcount(w);
    return c;
}

bit_vector bit_vector::from_raw(uint64_t nbits, std::vector<uint64_t> words) {
    if (words.size() != (nbits + 63) / 64)
        throw std::invalid_argument("bit_vector: raw word count does not match size");
    bit_vector out;
    out.n_ = nbits;
    out.words_ = std::move(words);
    return out;
}

bit_partition partition_by_bit(const packed_list& list, uint32_t t) {
    uint32_t b = list.width_bits();
    if (t >= b)
        throw std::invalid_argument("partition_by_bit: bit position out of range");

    bit_partition out;
    out.zeros = packed_list(b);
    out.ones = packed_list(b);

    uint64_t n = list.size();
    uint64_t i = 0;
    if (b <= tables::kChunkBits) {
        const tables::partition_table& tab = tables::partition_for(b, t);
        uint32_t per = tab.entries_per_chunk;
        for (; i + per <= n; i += per) {
            uint64_t chunk = list.read_bits(i * b, per * b);
            const tables::partition_entry& e = tab.at[chunk];
            out.zeros.append_entries(e.zeros, e.zero_count);
            out.ones.append_entries(e.ones, per - e.zero_count);
            out.bits.append_bits(e.flags, per);
        }
    }
    for (; i < n; ++i) {
        uint64_t v = list.get(i);
        bool bit = (v >> (b - 1 - t)) & 1;
        if (bit)
            out.ones.push_back(v);
        else
            out.zeros.push_back(v);
        out.bits.push_back(bit);
    }
    return out;
}

} // namespace wavetk
