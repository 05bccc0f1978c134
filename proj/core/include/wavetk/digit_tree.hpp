#ifndef WAVETK_DIGIT_TREE_HPP
#define WAVETK_DIGIT_TREE_HPP

#include "wavetk/packed_list.hpp"
#include "wavetk/wavelet_tree.hpp"

#include <cstdint>
#include <vector>

namespace wavetk {

// Generalized rank/select data for one packed digit string over [0, d).
// rank_le(c, i) counts positions k in [1, i] with D[k] <= c. The structure
// stores cumulative counts per superblock of d*4096 positions and per block
// of 256 positions, and finishes blocks with shared chunk tables.
class gen_rank_select {
public:
    static constexpr uint64_t kBlockLen = 256;

    gen_rank_select() = default;
    gen_rank_select(const packed_list& digits, uint32_t degree);

    uint32_t degree() const { return d_; }
    uint64_t superblock_len() const { return uint64_t(d_) * 4096; }
    uint64_t superblock_count() const { return d_ ? sb_.size() / d_ : 0; }

    uint64_t rank_le(const packed_list& digits, uint32_t c, uint64_t i) const;
    uint64_t rank_eq(const packed_list& digits, uint32_t c, uint64_t i) const {
        return rank_le(digits, c, i) - (c ? rank_le(digits, c - 1, i) : 0);
    }
    // 1-based position of the k-th occurrence of exactly c; throws when k is
    // out of range. Bisection over rank_eq, O(log n).
    uint64_t select_eq(const packed_list& digits, uint32_t c, uint64_t k) const;

    // Cumulative count of digits <= c strictly before superblock sb starts.
    uint64_t superblock_row(uint64_t sb, uint32_t c) const { return sb_[sb * d_ + c]; }
    // Cumulative count within the superblock before block blk starts.
    uint32_t block_row(uint64_t blk, uint32_t c) const { return blk_[blk * d_ + c]; }

private:
    uint32_t d_ = 0;
    uint32_t gbits_ = 0;
    std::vector<uint64_t> sb_;
    std::vector<uint32_t> blk_;
};

// Wavelet tree of degree d (a power of two) obtained by contracting the plain
// binary tree: a node at digit-level k keeps the string D_u of the next
// log2(d) routing bits of every element passing through it.
class digit_tree {
public:
    struct node {
        uint64_t prefix = 0; // top k digits of the values below this node
        packed_list digits;
        gen_rank_select grs;
    };

    digit_tree() = default;

    // wt's padded height must be a multiple of log2(d).
    static digit_tree build(const wavelet_tree& wt, uint32_t d);

    uint32_t degree() const { return d_; }
    uint32_t digit_bits() const { return g_; }
    uint32_t level_count() const { return uint32_t(levels_.size()); }
    uint64_t size() const { return n_; }

    const node* find(uint32_t level, uint64_t prefix) const;
    const std::vector<node>& level(uint32_t k) const { return levels_[k]; }

    uint64_t gen_rank(uint32_t level, uint64_t prefix, uint32_t c, uint64_t i) const;
    uint64_t gen_select(uint32_t level, uint64_t prefix, uint32_t c, uint64_t k) const;

    // Rebuild rank structures after deserializing raw digit strings.
    static digit_tree from_parts(uint32_t d, uint64_t n,
                                 std::vector<std::vector<node>> levels);

private:
    uint32_t d_ = 0;
    uint32_t g_ = 0;
    uint64_t n_ = 0;
    std::vector<std::vector<node>> levels_; // sorted by prefix
};

} // namespace wavetk

#endif
