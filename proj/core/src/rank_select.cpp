#include "wavetk/rank_select.hpp"

#include "wavetk/chunk_tables.hpp"

#include <bit>
#include <stdexcept>

namespace wavetk {

namespace {

inline uint64_t word_or_zero(const std::vector<uint64_t>& words, uint64_t idx) {
    return idx < words.size() ? words[idx] : 0;
}

} // namespace

rank_select::rank_select(bit_vector bits) : bits_(std::move(bits)) {
    build_rank();
    build_select(sel1_, true);
    build_select(sel0_, false);
}

void rank_select::build_rank() {
    uint64_t n = bits_.size();
    uint64_t nblocks = n / kBlockBits + 1;
    uint64_t nsupers = n / kSuperBits + 1;
    super_rank_.assign(nsupers, 0);
    block_rank_.assign(nblocks, 0);

    const auto& words = bits_.words();
    uint64_t total = 0;
    uint64_t super_base = 0;
    for (uint64_t blk = 0; blk < nblocks; ++blk) {
        uint64_t bit0 = blk * kBlockBits;
        if (bit0 % kSuperBits == 0) {
            super_rank_[bit0 / kSuperBits] = total;
            super_base = total;
        }
        block_rank_[blk] = uint16_t(total - super_base);
        uint64_t w0 = bit0 / 64;
        for (uint64_t w = w0; w < w0 + kBlockBits / 64; ++w)
            total += std::popcount(word_or_zero(words, w));
    }
    ones_ = bits_.count_ones();
}

uint64_t rank_select::rank1(uint64_t i) const {
    if (i > bits_.size())
        throw std::out_of_range("rank_select: rank position past end");
    uint64_t blk = i / kBlockBits;
    uint64_t r = super_rank_[i / kSuperBits] + block_rank_[blk];
    const auto& words = bits_.words();
    uint64_t w = blk * (kBlockBits / 64);
    uint64_t full = i / 64;
    for (; w < full; ++w)
        r += std::popcount(words[w]);
    uint32_t rem = i & 63;
    if (rem)
        r += std::popcount(words[full] & ((uint64_t(1) << rem) - 1));
    return r;
}

void rank_select::build_select(select_side& side, bool value) {
    uint64_t n = bits_.size();
    uint64_t total = value ? ones_ : n - ones_;
    if (total == 0)
        return;

    // Pass 1: position of every occurrence kSuperBits apart in occurrence
    // count, found by scanning words.
    const auto& words = bits_.words();
    uint64_t seen = 0;
    for (uint64_t w = 0; w * 64 < n; ++w) {
        uint64_t word = value ? words[w] : ~words[w];
        if ((w + 1) * 64 > n && (n & 63))
            word &= (uint64_t(1) << (n & 63)) - 1;
        uint32_t c = std::popcount(word);
        while (c > 0 && seen + c >= side.super_pos.size() * kSelectSample + 1) {
            uint64_t next_idx = side.super_pos.size() * kSelectSample + 1; // 1-based occurrence
            if (next_idx > seen && next_idx <= seen + c) {
                uint32_t inside = tables::select_in_word(word, uint32_t(next_idx - seen));
                side.super_pos.push_back(w * 64 + inside);
            } else {
                break;
            }
        }
        seen += c;
    }

    // Pass 2: classify superblocks and fill payloads.
    uint64_t nsb = side.super_pos.size();
    side.super_sparse.assign(nsb, 0);
    side.payload_off.assign(nsb, 0);
    for (uint64_t t = 0; t < nsb; ++t) {
        uint64_t start = side.super_pos[t];
        uint64_t end = (t + 1 < nsb) ? side.super_pos[t + 1] : n; // bit span limit
        uint64_t occ_here = std::min(kSelectSample, total - t * kSelectSample);
        bool sparse = (end - start) > kSelectSample * kSelectSample;
        side.super_sparse[t] = sparse ? 1 : 0;
        if (sparse) {
            side.payload_off[t] = side.sparse_pos.size();
            uint64_t pos = start;
            for (uint64_t r = 0; r < occ_here; ++r) {
                if (r > 0)
                    pos = scan_for_occurrence(pos + 1, 1, value);
                side.sparse_pos.push_back(pos);
            }
        } else {
            side.payload_off[t] = side.block_rel.size();
            uint64_t nblk = (occ_here + kSelectInner - 1) / kSelectInner;
            uint64_t pos = start;
            for (uint64_t b = 0; b < nblk; ++b) {
                if (b > 0)
                    pos = scan_for_occurrence(pos + 1, kSelectInner, value);
                side.block_rel.push_back(uint32_t(pos - start));
                uint64_t occ_blk = std::min(kSelectInner, occ_here - b * kSelectInner);
                uint64_t blk_end_pos = pos;
                if (occ_blk > 1)
                    blk_end_pos = scan_for_occurrence(pos + 1, occ_blk - 2 + 1, value);
                bool blk_sparse = (blk_end_pos - pos) > kSelectInner * kSelectInner;
                if (blk_sparse) {
                    side.block_payload.push_back(uint32_t(side.block_pos.size()));
                    uint64_t p = pos;
                    for (uint64_t r = 0; r < occ_blk; ++r) {
                        if (r > 0)
                            p = scan_for_occurrence(p + 1, 1, value);
                        side.block_pos.push_back(uint32_t(p - start));
                    }
                } else {
                    side.block_payload.push_back(UINT32_MAX);
                }
            }
        }
    }
}

// Scans from from_bit (0-based) for the skip-th occurrence of value; skip >= 1.
uint64_t rank_select::scan_for_occurrence(uint64_t from_bit, uint64_t skip, bool value) const {
    const auto& words = bits_.words();
    uint64_t n = bits_.size();
    uint64_t w = from_bit / 64;
    uint32_t off = from_bit & 63;
    while (w * 64 < n) {
        uint64_t word = value ? words[w] : ~words[w];
        if ((w + 1) * 64 > n && (n & 63))
            word &= (uint64_t(1) << (n & 63)) - 1;
        if (off) {
            word &= ~uint64_t(0) << off;
            off = 0;
        }
        uint32_t c = std::popcount(word);
        if (skip <= c)
            return w * 64 + tables::select_in_word(word, uint32_t(skip));
        skip -= c;
        ++w;
    }
    throw std::logic_error("rank_select: occurrence scan ran past end");
}

uint64_t rank_select::do_select(const select_side& side, bool value, uint64_t k, uint64_t total) const {
    if (k < 1 || k > total)
        throw std::out_of_range("rank_select: select ordinal out of range");
    uint64_t t = (k - 1) / kSelectSample;
    uint64_t r = (k - 1) % kSelectSample;
    uint64_t start = side.super_pos[t];
    if (side.super_sparse[t])
        return side.sparse_pos[side.payload_off[t] + r] + 1;

    uint64_t b = r / kSelectInner;
    uint64_t rr = r % kSelectInner;
    uint64_t blk_idx = side.payload_off[t] + b;
    uint64_t blk_start = start + side.block_rel[blk_idx];
    uint32_t payload = side.block_payload[blk_idx];
    if (payload != UINT32_MAX)
        return start + side.block_pos[payload + rr] + 1;
    if (rr == 0)
        return blk_start + 1;
    return scan_for_occurrence(blk_start + 1, rr, value) + 1;
}

uint64_t rank_select::select1(uint64_t k) const {
    return do_select(sel1_, true, k, ones_);
}

uint64_t rank_select::select0(uint64_t k) const {
    return do_select(sel0_, false, k, bits_.size() - ones_);
}

} // namespace wavetk
