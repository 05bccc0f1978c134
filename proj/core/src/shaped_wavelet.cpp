#include "wavetk/shaped_wavelet.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace wavetk {

namespace {

struct label_key {
    uint64_t w0, w1;
    uint32_t len;
    bool operator==(const label_key& o) const {
        return w0 == o.w0 && w1 == o.w1 && len == o.len;
    }
};

struct label_key_hash {
    size_t operator()(const label_key& k) const {
        uint64_t h = k.w0 * 0x9e3779b97f4a7c15ULL;
        h ^= k.w1 + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= uint64_t(k.len) + (h << 6) + (h >> 2);
        return size_t(h);
    }
};

label_key key_of(const path_label& lab) {
    return {lab.w[0], lab.w[1], lab.len};
}

} // namespace

node_bits build_shaped_bitmasks(std::span<const uint64_t> s, const tree_shape& shape,
                                const wavelet_build_options& opts, big_node_capture* capture) {
    uint64_t sigma = shape.sigma();
    uint32_t height = shape.height();
    double lg_sigma = sigma > 1 ? std::log2(double(sigma)) : 0.0;
    if (height > uint32_t(4.0 * lg_sigma) + 8)
        throw std::invalid_argument("shaped wavelet tree: shape height exceeds 4*log2(sigma) + 8");

    node_bits bits(shape.nodes().size());
    if (height == 0)
        return bits; // single leaf, nothing to store

    std::vector<path_label> labels;
    std::vector<uint32_t> depths;
    shape.walk_labels(labels, depths);

    // The dictionary that resolves a padded routing prefix to a node.
    std::unordered_map<label_key, uint32_t, label_key_hash> dict;
    dict.reserve(shape.nodes().size());
    for (uint32_t v = 0; v < shape.nodes().size(); ++v)
        dict.emplace(key_of(labels[v]), v);

    // Leaf label per symbol, consulted for every routing window.
    std::vector<path_label> sym_label(sigma);
    for (uint64_t c = 0; c < sigma; ++c)
        sym_label[c] = labels[shape.leaf_of(c)];

    uint64_t n = s.size();
    uint32_t tau = opts.tau.value_or(default_tau(n));
    if (tau < 1)
        throw std::invalid_argument("shaped wavelet tree: tau must be >= 1");
    uint32_t sym_bits = std::max<uint32_t>(1, ceil_log2(sigma));

    for (uint64_t i = 0; i < n; ++i)
        if (s[i] >= sigma)
            throw std::invalid_argument("shaped wavelet tree: symbol out of range");

    // Big-node lists for the current band, as (node id, symbols).
    std::vector<std::pair<uint32_t, packed_list>> cur;
    {
        packed_list root(sym_bits);
        for (uint64_t i = 0; i < n; ++i)
            root.push_back(s[i]);
        cur.emplace_back(shape.root(), std::move(root));
    }

    for (uint32_t d0 = 0; d0 < height && !cur.empty(); d0 += tau) {
        uint32_t span = std::min(tau, height - d0);
        bool want_next = d0 + tau < height;

        if (capture)
            for (auto& [v, list] : cur)
                capture->lists.emplace(std::make_pair(d0, labels[v].window(0, d0)), list);

        std::vector<std::pair<uint32_t, packed_list>> next;
        if (want_next) {
            std::unordered_map<uint32_t, uint32_t> slot; // node id -> index in next
            for (auto& [v, list] : cur) {
                uint64_t len = list.size();
                for (uint64_t i = 0; i < len; ++i) {
                    uint64_t c = list.get(i);
                    const path_label& pl = sym_label[c];
                    // A routing prefix past the symbol's leaf addresses nothing.
                    auto it = dict.find(key_of(pl.prefix(d0 + tau)));
                    if (it == dict.end() || shape.is_leaf(it->second))
                        continue;
                    auto [si, inserted] = slot.try_emplace(it->second, uint32_t(next.size()));
                    if (inserted)
                        next.emplace_back(it->second, packed_list(sym_bits));
                    next[si->second].second.push_back(c);
                }
            }
        }

        // Window lists over the band, split one level at a time.
        for (auto& [v0, list] : cur) {
            packed_list window(span);
            uint64_t len = list.size();
            for (uint64_t i = 0; i < len; ++i)
                window.push_back(sym_label[list.get(i)].window(d0, span));

            std::vector<std::pair<uint32_t, packed_list>> level;
            level.emplace_back(v0, std::move(window));
            for (uint32_t beta = 0; beta < span; ++beta) {
                std::vector<std::pair<uint32_t, packed_list>> deeper;
                for (auto& [v, lst] : level) {
                    if (shape.is_leaf(v) || lst.empty())
                        continue;
                    bit_partition part = partition_by_bit(lst, beta);
                    bits.set_node(v, part.bits);
                    if (beta + 1 < span) {
                        const tree_shape::node& nd = shape.nodes()[v];
                        if (!part.zeros.empty())
                            deeper.emplace_back(uint32_t(nd.left), std::move(part.zeros));
                        if (!part.ones.empty())
                            deeper.emplace_back(uint32_t(nd.right), std::move(part.ones));
                    }
                }
                level = std::move(deeper);
            }
        }
        cur = std::move(next);
    }
    return bits;
}

shaped_wavelet_tree::shaped_wavelet_tree(std::span<const uint64_t> s, tree_shape shape,
                                         const wavelet_build_options& opts)
    : n_(s.size()), shape_(std::move(shape)) {
    bits_ = build_shaped_bitmasks(s, shape_, opts);
}

uint64_t shaped_wavelet_tree::access(uint64_t pos) const {
    if (pos < 1 || pos > n_)
        throw std::out_of_range("shaped wavelet tree: access position out of range");
    uint64_t idx = pos - 1;
    uint32_t v = shape_.root();
    while (!shape_.is_leaf(v)) {
        bool b = bits_.get(v, idx);
        idx = b ? bits_.rank1(v, idx) : bits_.rank0(v, idx);
        v = uint32_t(b ? shape_.nodes()[v].right : shape_.nodes()[v].left);
    }
    return uint64_t(shape_.nodes()[v].symbol);
}

} // namespace wavetk
