#ifndef WAVETK_TREE_SHAPE_HPP
#define WAVETK_TREE_SHAPE_HPP

#include <cstdint>
#include <vector>

namespace wavetk {

// Root-to-node path label, one bit per edge (0 = left), most significant step
// first. Two words cover heights up to 128.
struct path_label {
    uint64_t w[2] = {0, 0};
    uint32_t len = 0;

    void push(bool right) {
        if (len >= 128)
            return;
        if (right)
            w[len >> 6] |= uint64_t(1) << (63 - (len & 63));
        ++len;
    }
    void pop() {
        --len;
        w[len >> 6] &= ~(uint64_t(1) << (63 - (len & 63)));
    }
    bool bit(uint32_t i) const { return (w[i >> 6] >> (63 - (i & 63))) & 1; }

    // Bits [pos, pos+n), n <= 63, as an integer; bits past len read as the
    // zero padding the routing works with.
    uint64_t window(uint32_t pos, uint32_t n) const;

    path_label prefix(uint32_t n) const;

    bool operator==(const path_label& o) const {
        return len == o.len && w[0] == o.w[0] && w[1] == o.w[1];
    }
};

// A full binary tree over sigma leaves with a bijection between leaves and
// symbols 0..sigma-1. Node 0 need not be the root; `root` names it.
class tree_shape {
public:
    struct node {
        int32_t left = -1;
        int32_t right = -1;
        int64_t symbol = -1; // valid iff leaf
    };

    tree_shape() = default;
    tree_shape(std::vector<node> nodes, uint32_t root);

    static tree_shape perfect(uint64_t sigma); // sigma a power of two

    const std::vector<node>& nodes() const { return nodes_; }
    uint32_t root() const { return root_; }
    uint64_t sigma() const { return sigma_; }
    uint32_t height() const { return height_; }
    bool is_leaf(uint32_t v) const { return nodes_[v].left < 0; }

    // Leaf node id for a symbol; throws if the symbol has no leaf.
    uint32_t leaf_of(uint64_t symbol) const;

    // Per-node depths and labels in node-id order (computed, not stored).
    void walk_labels(std::vector<path_label>& labels, std::vector<uint32_t>& depths) const;

private:
    void validate();

    std::vector<node> nodes_;
    uint32_t root_ = 0;
    uint64_t sigma_ = 0;
    uint32_t height_ = 0;
    std::vector<int32_t> leaf_of_; // symbol -> node id
};

} // namespace wavetk

#endif
