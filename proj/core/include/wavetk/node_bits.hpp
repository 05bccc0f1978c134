#ifndef WAVETK_NODE_BITS_HPP
#define WAVETK_NODE_BITS_HPP

#include "wavetk/packed_list.hpp"

#include <cstdint>
#include <vector>

namespace wavetk {

// Bitmasks of all nodes of one wavelet tree stored back to back, each segment
// starting at a fresh word, with block-cumulative rank counts per segment.
// Only rank and single-bit access are needed on tree nodes; select is provided
// by bisection for completeness.
class node_bits {
public:
    static constexpr uint64_t kBlockBits = 256;

    node_bits() = default;
    explicit node_bits(uint64_t node_count) : segs_(node_count) {}

    void resize_nodes(uint64_t node_count) { segs_.resize(node_count); }
    uint64_t node_count() const { return segs_.size(); }

    // Installs the bitmask of `node`; each node may be set at most once.
    void set_node(uint64_t node, const bit_vector& bits);

    bool has_node(uint64_t node) const { return node < segs_.size() && segs_[node].nbits > 0; }
    uint64_t size(uint64_t node) const { return segs_[node].nbits; }
    uint64_t ones(uint64_t node) const { return segs_[node].ones; }

    bool get(uint64_t node, uint64_t i) const {
        const seg& s = segs_[node];
        return (words_[s.word_off + (i >> 6)] >> (i & 63)) & 1u;
    }

    // rank over the first i bits of the node's bitmask, i in [0, size(node)].
    uint64_t rank1(uint64_t node, uint64_t i) const;
    uint64_t rank0(uint64_t node, uint64_t i) const { return i - rank1(node, i); }
    uint64_t rank(uint64_t node, bool b, uint64_t i) const {
        return b ? rank1(node, i) : rank0(node, i);
    }

    // 1-based position of the k-th occurrence; O(log nbits) by rank bisection.
    uint64_t select1(uint64_t node, uint64_t k) const;
    uint64_t select0(uint64_t node, uint64_t k) const;

    bit_vector extract(uint64_t node) const;

    uint64_t total_bits() const { return total_bits_; }

private:
    struct seg {
        uint64_t word_off = 0;
        uint64_t blk_off = 0;
        uint64_t nbits = 0;
        uint64_t ones = 0;
    };

    std::vector<uint64_t> words_;
    std::vector<uint32_t> blkcum_; // per 256 bits, cumulative ones from segment start
    std::vector<seg> segs_;
    uint64_t total_bits_ = 0;
};

} // namespace wavetk

#endif
