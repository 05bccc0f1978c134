#ifndef WAVETK_WAVELET_SUFFIX_TREE_HPP
#define WAVETK_WAVELET_SUFFIX_TREE_HPP

#include "wavetk/node_bits.hpp"
#include "wavetk/periodic.hpp"
#include "wavetk/text_index.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wavetk {

// Defines how the query string y of a suffix rank query is compared against
// suffixes and substrings of the indexed text. The plain implementation works
// inside one text; the cross-text one lets a tree built for a substring of a
// larger string accept y given in the larger string's coordinates.
class suffix_order {
public:
    virtual ~suffix_order() = default;
    virtual int suffix_vs_y(uint64_t suffix_start) const = 0; // sign(suffix - y)
    virtual int window_vs_y(uint64_t lo, uint64_t hi) const = 0;
};

// Run-length encoded string over shifted characters (0 is the sentinel).
struct rle_run {
    uint32_t chr = 0;
    uint64_t len = 0;
    bool operator==(const rle_run&) const = default;
};

// Suffixes of a query substring that lie on one edge, as non-overlapping
// periodic progressions of start positions. Parts are ordered by ascending
// suffix length; inside a part ascending length means descending position.
struct edge_suffixes {
    std::vector<progression> parts;
    uint64_t total = 0;
    uint64_t end = 0; // common end position of the suffix windows

    uint64_t nth_start(uint64_t m) const { // m is 0-based in ascending length order
        for (const progression& p : parts) {
            if (m < p.count)
                return p.term(p.count - 1 - m);
            m -= p.count;
        }
        throw std::out_of_range("edge_suffixes: index past the list");
    }
};

// Full binary tree of logarithmic height over the suffixes of w$, two
// bitmasks per node (suffixes by start position and by preceding character),
// levels, and string intervals steering every query.
class wavelet_suffix_tree {
public:
    static constexpr uint32_t knil = UINT32_MAX;

    struct tnode {
        uint32_t left = knil;
        uint32_t right = knil;
        uint32_t leaf_lo = 0; // leaf rank interval, 1-based inclusive
        uint32_t leaf_hi = 0;
        uint64_t level = 0;
    };

    wavelet_suffix_tree() = default;
    explicit wavelet_suffix_tree(const text_index& ti);

    const text_index& text() const { return *ti_; }
    uint64_t leaf_count() const { return ti_->n() + 1; }
    uint32_t root() const { return root_; }
    uint32_t node_count() const { return uint32_t(nodes_.size()); }
    const tnode& node(uint32_t v) const { return nodes_[v]; }
    bool is_leaf(uint32_t v) const { return nodes_[v].left == knil; }
    uint32_t height() const { return height_; }

    uint64_t min_start(uint32_t v) const { return ti_->sa(nodes_[v].leaf_lo); }
    uint64_t max_start(uint32_t v) const { return ti_->sa(nodes_[v].leaf_hi); }

    // I(u) and I(u, child); trims use the parent's level for edges.
    string_interval node_interval(uint32_t v) const;
    string_interval edge_interval(uint32_t parent, uint32_t child) const;
    // Longest common prefix of all strings in I(v), as a window handle.
    substr common_prefix(uint32_t v) const;

    const node_bits& pos_bits() const { return pos_bits_; }
    const node_bits& chr_bits() const { return chr_bits_; }

    // Auxiliary query (1): L_x(e) for e = (parent, child).
    edge_suffixes edge_suffix_list(substr x, uint32_t parent, uint32_t child) const;

    // Auxiliary query (2): suffixes of x in the subtree hanging off `parent`
    // toward `child`, where [lo, hi) is the parent's first-bitmask segment of
    // suffixes starting inside x (0-based half-open).
    uint64_t count_side(substr x, uint32_t parent, uint32_t child, uint64_t lo, uint64_t hi) const;

    // Auxiliary query (3): same restricted to suffixes preceded by chr, with
    // [lo, hi) the matching segment of the second bitmask.
    uint64_t count_side_char(substr x, uint32_t parent, uint32_t child, uint32_t chr, uint64_t lo,
                             uint64_t hi) const;

    // Auxiliary query (4): run-length encoding of the characters preceding
    // the suffixes in L_x(e), in list order.
    std::vector<rle_run> edge_preceding_rle(substr x, uint32_t parent, uint32_t child) const;

    // Number of suffixes of x lexicographically smaller than y.
    uint64_t suffix_rank(substr x, substr y) const;
    uint64_t suffix_rank(substr x, const suffix_order& y) const;

    // k-th lexicographically smallest suffix of x, 1-based k.
    substr suffix_select(substr x, uint64_t k) const;

    // Run-length encoding of the Burrows-Wheeler transform of x (over the
    // shifted alphabet; run 0 is the sentinel).
    std::vector<rle_run> bwt_rle(substr x) const;

    // Second-ordering root segment for (chr, positions in [i, j]), half-open.
    std::pair<uint64_t, uint64_t> root_char_segment(uint32_t chr, uint64_t i, uint64_t j) const;

    // Edges traversed by the last bwt_rle call on this thread; measured by
    // the acceptance suite against the s*log n bound.
    static uint64_t last_bwt_edge_count();

    static wavelet_suffix_tree from_parts(const text_index& ti, std::vector<tnode> nodes,
                                          uint32_t root, node_bits pos, node_bits chr);

private:
    struct side_counts {
        uint64_t in_segment = 0;
        uint64_t over = 0;
        uint64_t shorts = 0;
    };

    void finish_build();
    void check_observation_clauses() const;

    // Positions k in [a, b] with w[k..]$ in I(parent, child), <= 2 parts.
    std::vector<progression> suffix_positions_in_edge(uint64_t a, uint64_t b, uint32_t parent,
                                                      uint32_t child) const;
    // Suffixes of x shorter than the parent's level lying in I(parent, child).
    progression short_suffixes_in_edge(substr x, uint32_t parent, uint32_t child) const;
    // Drops the terms of p that fall inside I(child); single piece remains.
    progression remove_child_members(const progression& p, uint64_t j, uint32_t child) const;

    uint64_t count_progression_prev(const progression& p, uint32_t chr) const;

    void compute_prefix_windows();

    const text_index* ti_ = nullptr;
    std::vector<tnode> nodes_;
    uint32_t root_ = 0;
    uint32_t height_ = 0;
    node_bits pos_bits_;
    node_bits chr_bits_;
    std::vector<uint32_t> char_starts_; // positions sorted by (prev char, position)
    std::vector<uint64_t> char_bucket_; // per shifted char, offset into char_starts_
    std::vector<sa_window> pfx_win_;    // per node, suffixes starting with its common prefix
};

} // namespace wavetk

#endif
