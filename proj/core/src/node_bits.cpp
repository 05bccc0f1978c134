#include "wavetk/node_bits.hpp"

#include <bit>
#include <stdexcept>

namespace wavetk {

void node_bits::set_node(uint64_t node, const bit_vector& bits) {
    if (node >= segs_.size())
        segs_.resize(node + 1);
    seg& s = segs_[node];
    if (s.nbits != 0)
        throw std::logic_error("node_bits: node bitmask set twice");
    if (bits.empty())
        return;
    s.word_off = words_.size();
    s.blk_off = blkcum_.size();
    s.nbits = bits.size();
    words_.insert(words_.end(), bits.words().begin(), bits.words().end());
    uint64_t nblk = s.nbits / kBlockBits + 1;
    uint32_t running = 0;
    for (uint64_t b = 0; b < nblk; ++b) {
        blkcum_.push_back(running);
        uint64_t w0 = s.word_off + b * (kBlockBits / 64);
        for (uint64_t w = w0; w < w0 + kBlockBits / 64 && w < words_.size(); ++w)
            running += uint32_t(std::popcount(words_[w]));
    }
    s.ones = bits.count_ones();
    total_bits_ += s.nbits;
}

uint64_t node_bits::rank1(uint64_t node, uint64_t i) const {
    const seg& s = segs_[node];
    if (s.nbits == 0)
        return 0;
    uint64_t blk = i / kBlockBits;
    uint64_t r = blkcum_[s.blk_off + blk];
    uint64_t w = s.word_off + blk * (kBlockBits / 64);
    uint64_t full = s.word_off + i / 64;
    for (; w < full; ++w)
        r += std::popcount(words_[w]);
    uint32_t rem = i & 63;
    if (rem)
        r += std::popcount(words_[full] & ((uint64_t(1) << rem) - 1));
    return r;
}

uint64_t node_bits::select1(uint64_t node, uint64_t k) const {
    const seg& s = segs_[node];
    if (k < 1 || k > s.ones)
        throw std::out_of_range("node_bits: select1 out of range");
    uint64_t lo = 0, hi = s.nbits; // smallest i with rank1(i) >= k
    while (lo < hi) {
        uint64_t mid = (lo + hi) / 2;
        if (rank1(node, mid) >= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

uint64_t node_bits::select0(uint64_t node, uint64_t k) const {
    const seg& s = segs_[node];
    if (k < 1 || k > s.nbits - s.ones)
        throw std::out_of_range("node_bits: select0 out of range");
    uint64_t lo = 0, hi = s.nbits;
    while (lo < hi) {
        uint64_t mid = (lo + hi) / 2;
        if (rank0(node, mid) >= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

bit_vector node_bits::extract(uint64_t node) const {
    const seg& s = segs_[node];
    std::vector<uint64_t> w(words_.begin() + s.word_off,
                            words_.begin() + s.word_off + (s.nbits + 63) / 64);
    return bit_vector::from_raw(s.nbits, std::move(w));
}

} // namespace wavetk
