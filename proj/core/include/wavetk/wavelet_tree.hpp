#ifndef WAVETK_WAVELET_TREE_HPP
#define WAVETK_WAVELET_TREE_HPP

#include "wavetk/node_bits.hpp"
#include "wavetk/packed_list.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace wavetk {

struct wavelet_build_options {
    // Big-node stride; default max(1, floor(sqrt(log2 n))).
    std::optional<uint32_t> tau;
};

// Subsequences routed through the big nodes, recorded during construction.
// Keyed by (depth, path label as an integer, most significant step first).
struct big_node_capture {
    std::map<std::pair<uint32_t, uint64_t>, packed_list> lists;
};

uint32_t default_tau(uint64_t n);
uint32_t ceil_log2(uint64_t v);

// Perfect binary wavelet tree over [0, sigma). Nodes carry heap numbers:
// root = 1, children of v are 2v and 2v+1, so the inner node whose path label
// is the len-bit string L has number 2^len + L.
class wavelet_tree {
public:
    wavelet_tree() = default;

    static wavelet_tree build(const packed_list& s, uint64_t sigma,
                              const wavelet_build_options& opts = {},
                              big_node_capture* capture = nullptr);
    static wavelet_tree build(std::span<const uint64_t> s, uint64_t sigma,
                              const wavelet_build_options& opts = {},
                              big_node_capture* capture = nullptr);

    uint64_t size() const { return n_; }
    uint64_t sigma() const { return sigma_; }
    uint32_t height() const { return h_; }
    uint32_t tau() const { return tau_; }

    // 1-based sequence position.
    uint64_t access(uint64_t pos) const;

    const node_bits& bitmasks() const { return bits_; }
    node_bits& bitmasks() { return bits_; }

    static uint64_t heap_node(uint32_t depth, uint64_t label) {
        return (uint64_t(1) << depth) + label;
    }

    static wavelet_tree from_parts(uint64_t n, uint64_t sigma, uint32_t h, uint32_t tau,
                                   node_bits bits);

private:
    uint64_t n_ = 0;
    uint64_t sigma_ = 0; // as given, before padding
    uint32_t h_ = 0;     // levels; alphabet padded to 1 << h_
    uint32_t tau_ = 1;
    node_bits bits_;
};

} // namespace wavetk

#endif
