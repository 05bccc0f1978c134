#ifndef WAVETK_SHAPED_WAVELET_HPP
#define WAVETK_SHAPED_WAVELET_HPP

#include "wavetk/node_bits.hpp"
#include "wavetk/tree_shape.hpp"
#include "wavetk/wavelet_tree.hpp"

#include <span>

namespace wavetk {

// Builds the per-node bitmasks of the T-shaped wavelet tree of s, indexed by
// shape node id. Elements are routed by root-to-leaf path labels padded with
// zeros to uniform length; routing windows that address no node are dropped.
// The shape height must stay within 4*log2(sigma) + 8.
node_bits build_shaped_bitmasks(std::span<const uint64_t> s, const tree_shape& shape,
                                const wavelet_build_options& opts = {},
                                big_node_capture* capture = nullptr);

// Convenience wrapper owning the shape together with its bitmasks.
class shaped_wavelet_tree {
public:
    shaped_wavelet_tree() = default;
    shaped_wavelet_tree(std::span<const uint64_t> s, tree_shape shape,
                        const wavelet_build_options& opts = {});

    uint64_t size() const { return n_; }
    const tree_shape& shape() const { return shape_; }
    const node_bits& bitmasks() const { return bits_; }

    uint64_t access(uint64_t pos) const; // 1-based

private:
    uint64_t n_ = 0;
    tree_shape shape_;
    node_bits bits_;
};

} // namespace wavetk

#endif
