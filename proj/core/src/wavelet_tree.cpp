#include "wavetk/wavelet_tree.hpp"

#include <cmath>
#include <stdexcept>

namespace wavetk {

uint32_t ceil_log2(uint64_t v) {
    uint32_t h = 0;
    while ((uint64_t(1) << h) < v)
        ++h;
    return h;
}

uint32_t default_tau(uint64_t n) {
    if (n < 2)
        return 1;
    uint32_t lg = ceil_log2(n);
    auto t = uint32_t(std::sqrt(double(lg)));
    return t < 1 ? 1 : t;
}

namespace {

// One band of the two-phase construction: given the symbol lists of the big
// nodes at depth d0, emit the bitmasks of all nodes at depths [d0, d0+span)
// from packed window lists and produce the lists for depth d0+span.
struct band_state {
    // (label, symbols) for big nodes at the current depth, label order.
    std::vector<std::pair<uint64_t, packed_list>> lists;
};

} // namespace

wavelet_tree wavelet_tree::build(std::span<const uint64_t> s, uint64_t sigma,
                                 const wavelet_build_options& opts, big_node_capture* capture) {
    uint32_t h = ceil_log2(sigma < 1 ? 1 : sigma);
    return build(packed_list::pack(s, h == 0 ? 1 : h), sigma, opts, capture);
}

wavelet_tree wavelet_tree::build(const packed_list& s, uint64_t sigma,
                                 const wavelet_build_options& opts, big_node_capture* capture) {
    wavelet_tree wt;
    wt.n_ = s.size();
    wt.sigma_ = sigma;
    wt.h_ = ceil_log2(sigma < 1 ? 1 : sigma);
    wt.tau_ = opts.tau.value_or(default_tau(wt.n_));
    if (wt.tau_ < 1)
        throw std::invalid_argument("wavelet_tree: tau must be >= 1");
    uint32_t h = wt.h_;
    uint32_t tau = wt.tau_;

    for (uint64_t i = 0; i < s.size(); ++i)
        if (s.get(i) >= sigma)
            throw std::invalid_argument("wavelet_tree: symbol out of alphabet range");

    wt.bits_.resize_nodes(uint64_t(1) << h);
    if (h == 0)
        return wt; // unary alphabet, no bitmasks

    uint32_t sym_bits = h;

    band_state cur;
    {
        packed_list root(sym_bits);
        for (uint64_t i = 0; i < s.size(); ++i)
            root.push_back(s.get(i));
        cur.lists.emplace_back(0, std::move(root));
    }

    for (uint32_t d0 = 0; d0 < h; d0 += tau) {
        uint32_t span = std::min(tau, h - d0);
        bool want_next = d0 + tau < h;

        if (capture)
            for (auto& [label, list] : cur.lists)
                capture->lists.emplace(std::make_pair(d0, label), list);

        // First phase: route whole symbols to the big nodes of the next band.
        band_state next;
        if (want_next) {
            std::vector<packed_list> buckets(uint64_t(1) << tau, packed_list(sym_bits));
            for (auto& [label, list] : cur.lists) {
                for (auto& b : buckets)
                    b.clear();
                uint64_t len = list.size();
                for (uint64_t i = 0; i < len; ++i) {
                    uint64_t v = list.get(i);
                    uint64_t t = (v >> (h - d0 - tau)) & ((uint64_t(1) << tau) - 1);
                    buckets[t].push_back(v);
                }
                for (uint64_t t = 0; t < buckets.size(); ++t)
                    if (!buckets[t].empty())
                        next.lists.emplace_back((label << tau) | t, std::move(buckets[t]));
            }
        }

        // Second phase: short window lists, split level by level with the
        // chunk tables, emitting one bitmask per node.
        for (auto& [label, list] : cur.lists) {
            packed_list window(span);
            uint64_t len = list.size();
            for (uint64_t i = 0; i < len; ++i) {
                uint64_t v = list.get(i);
                window.push_back((v >> (h - d0 - span)) & ((uint64_t(1) << span) - 1));
            }
            std::vector<std::pair<uint64_t, packed_list>> level;
            level.emplace_back(label, std::move(window));
            for (uint32_t beta = 0; beta < span; ++beta) {
                std::vector<std::pair<uint64_t, packed_list>> deeper;
                for (auto& [lab, lst] : level) {
                    bit_partition part = partition_by_bit(lst, beta);
                    wt.bits_.set_node(heap_node(d0 + beta, lab), part.bits);
                    if (beta + 1 < span) {
                        if (!part.zeros.empty())
                            deeper.emplace_back(lab << 1, std::move(part.zeros));
                        if (!part.ones.empty())
                            deeper.emplace_back((lab << 1) | 1, std::move(part.ones));
                    }
                }
                level = std::move(deeper);
            }
        }

        cur = std::move(next);
    }
    return wt;
}

uint64_t wavelet_tree::access(uint64_t pos) const {
    if (pos < 1 || pos > n_)
        throw std::out_of_range("wavelet_tree: access position out of range");
    uint64_t idx = pos - 1;
    uint64_t label = 0;
    for (uint32_t d = 0; d < h_; ++d) {
        uint64_t node = heap_node(d, label);
        bool b = bits_.get(node, idx);
        idx = b ? bits_.rank1(node, idx) : bits_.rank0(node, idx);
        label = (label << 1) | (b ? 1 : 0);
    }
    return label;
}

wavelet_tree wavelet_tree::from_parts(uint64_t n, uint64_t sigma, uint32_t h, uint32_t tau,
                                      node_bits bits) {
    wavelet_tree wt;
    wt.n_ = n;
    wt.sigma_ = sigma;
    wt.h_ = h;
    wt.tau_ = tau;
    wt.bits_ = std::move(bits);
    return wt;
}

} // namespace wavetk
