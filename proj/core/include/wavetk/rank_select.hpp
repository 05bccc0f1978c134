#ifndef WAVETK_RANK_SELECT_HPP
#define WAVETK_RANK_SELECT_HPP

#include "wavetk/packed_list.hpp"

#include <cstdint>
#include <vector>

namespace wavetk {

// Rank/select over an owned bitmask. rank_b(i) counts occurrences of b among
// the first i bits (i in [0, N]); select_b(k) returns the 1-based position of
// the k-th occurrence and rejects k out of range.
//
// Layout: cumulative ranks per 65536-bit superblock and 512-bit block; select
// samples every 8192-th occurrence per bit value, with superblocks spanning
// more than 8192^2 bits storing their occurrence positions outright and dense
// superblocks carrying one more sampling level (every 64th occurrence,
// positions kept relative, blocks spanning more than 64^2 bits again stored
// outright).
class rank_select {
public:
    static constexpr uint64_t kSuperBits = 65536;
    static constexpr uint64_t kBlockBits = 512;
    static constexpr uint64_t kSelectSample = 8192;
    static constexpr uint64_t kSelectInner = 64;

    rank_select() = default;
    explicit rank_select(bit_vector bits);

    const bit_vector& bits() const { return bits_; }
    uint64_t size() const { return bits_.size(); }
    uint64_t ones() const { return ones_; }
    uint64_t zeros() const { return bits_.size() - ones_; }

    uint64_t rank1(uint64_t i) const;
    uint64_t rank0(uint64_t i) const { return i - rank1(i); }
    uint64_t rank(bool b, uint64_t i) const { return b ? rank1(i) : rank0(i); }

    uint64_t select1(uint64_t k) const;
    uint64_t select0(uint64_t k) const;
    uint64_t select(bool b, uint64_t k) const { return b ? select1(k) : select0(k); }

private:
    struct select_side {
        std::vector<uint64_t> super_pos;    // 0-based position of occurrence t*S + 1
        std::vector<uint8_t> super_sparse;
        std::vector<uint64_t> payload_off;  // per superblock, into sparse_pos or block arrays
        std::vector<uint64_t> sparse_pos;   // absolute positions, sparse superblocks
        std::vector<uint32_t> block_rel;    // dense: position of occurrence r*64+1, relative
        std::vector<uint32_t> block_payload; // UINT32_MAX = dense block, else offset into block_pos
        std::vector<uint32_t> block_pos;    // relative positions, sparse blocks
    };

    void build_rank();
    void build_select(select_side& side, bool value);
    uint64_t do_select(const select_side& side, bool value, uint64_t k, uint64_t total) const;
    uint64_t scan_for_occurrence(uint64_t from_bit, uint64_t skip, bool value) const;

    bit_vector bits_;
    uint64_t ones_ = 0;
    std::vector<uint64_t> super_rank_;
    std::vector<uint16_t> block_rank_;
    select_side sel1_, sel0_;
};

} // namespace wavetk

#endif
