#include "wavetk/tree_shape.hpp"

#include <stdexcept>

namespace wavetk {

uint64_t path_label::window(uint32_t pos, uint32_t n) const {
    uint64_t out = 0;
    for (uint32_t i = 0; i < n; ++i) {
        out <<= 1;
        uint32_t p = pos + i;
        if (p < 128)
            out |= (w[p >> 6] >> (63 - (p & 63))) & 1;
    }
    return out;
}

path_label path_label::prefix(uint32_t n) const {
    path_label out;
    out.len = n;
    out.w[0] = w[0];
    out.w[1] = w[1];
    if (n == 0) {
        out.w[0] = out.w[1] = 0;
    } else if (n <= 64) {
        out.w[0] &= n == 64 ? ~uint64_t(0) : (~uint64_t(0) << (64 - n));
        out.w[1] = 0;
    } else if (n < 128) {
        out.w[1] &= ~uint64_t(0) << (128 - n);
    }
    return out;
}

tree_shape::tree_shape(std::vector<node> nodes, uint32_t root) : nodes_(std::move(nodes)), root_(root) {
    validate();
}

tree_shape tree_shape::perfect(uint64_t sigma) {
    if (sigma == 0 || (sigma & (sigma - 1)) != 0)
        throw std::invalid_argument("tree_shape: perfect shape needs a power-of-two sigma");
    std::vector<node> nodes(2 * sigma - 1);
    // Heap layout shifted down by one: node i has children 2i+1, 2i+2.
    for (uint64_t i = 0; i + 1 < sigma; ++i) {
        nodes[i].left = int32_t(2 * i + 1);
        nodes[i].right = int32_t(2 * i + 2);
    }
    for (uint64_t s = 0; s < sigma; ++s)
        nodes[sigma - 1 + s].symbol = int64_t(s);
    return tree_shape(std::move(nodes), 0);
}

void tree_shape::validate() {
    if (nodes_.empty())
        throw std::invalid_argument("tree_shape: empty");
    uint64_t leaves = 0;
    int64_t max_symbol = -1;
    for (const node& nd : nodes_) {
        bool l = nd.left >= 0, r = nd.right >= 0;
        if (l != r)
            throw std::invalid_argument("tree_shape: node with exactly one child");
        if (!l) {
            if (nd.symbol < 0)
                throw std::invalid_argument("tree_shape: leaf without symbol");
            ++leaves;
            if (nd.symbol > max_symbol)
                max_symbol = nd.symbol;
        }
    }
    sigma_ = leaves;
    if (uint64_t(max_symbol) + 1 != leaves)
        throw std::invalid_argument("tree_shape: leaf symbols must be exactly 0..sigma-1");
    leaf_of_.assign(leaves, -1);

    // Iterative depth-first pass: depths, leaf map, reachability.
    std::vector<std::pair<uint32_t, uint32_t>> stack{{root_, 0}};
    uint64_t seen = 0;
    height_ = 0;
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        ++seen;
        if (d > height_)
            height_ = d;
        const node& nd = nodes_[v];
        if (nd.left < 0) {
            if (leaf_of_[nd.symbol] >= 0)
                throw std::invalid_argument("tree_shape: duplicate leaf symbol");
            leaf_of_[nd.symbol] = int32_t(v);
        } else {
            stack.emplace_back(uint32_t(nd.left), d + 1);
            stack.emplace_back(uint32_t(nd.right), d + 1);
        }
    }
    if (seen != nodes_.size())
        throw std::invalid_argument("tree_shape: unreachable nodes");
    if (height_ > 128)
        throw std::invalid_argument("tree_shape: height exceeds 128");
}

uint32_t tree_shape::leaf_of(uint64_t symbol) const {
    if (symbol >= leaf_of_.size() || leaf_of_[symbol] < 0)
        throw std::invalid_argument("tree_shape: symbol has no leaf");
    return uint32_t(leaf_of_[symbol]);
}

void tree_shape::walk_labels(std::vector<path_label>& labels, std::vector<uint32_t>& depths) const {
    labels.assign(nodes_.size(), {});
    depths.assign(nodes_.size(), 0);
    struct frame {
        uint32_t v;
        path_label lab;
    };
    std::vector<frame> stack{{root_, {}}};
    while (!stack.empty()) {
        frame f = stack.back();
        stack.pop_back();
        labels[f.v] = f.lab;
        depths[f.v] = f.lab.len;
        const node& nd = nodes_[f.v];
        if (nd.left >= 0) {
            path_label l = f.lab;
            l.push(false);
            stack.push_back({uint32_t(nd.left), l});
            path_label r = f.lab;
            r.push(true);
            stack.push_back({uint32_t(nd.right), r});
        }
    }
}

} // namespace wavetk
