#ifndef WAVETK_RANGE_INDEX_HPP
#define WAVETK_RANGE_INDEX_HPP

#include "wavetk/digit_tree.hpp"
#include "wavetk/rmq.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wavetk {

// Cumulative-rank matrices attached to one digit string: per superblock the
// d-row matrix M kept both row-per-word and as overlapping column sections,
// and per block the small in-superblock matrix M'. The row data lives in the
// node's generalized rank structure; the sections are materialized here with
// a four-column overlap and max(8, 64/d) columns per section.
struct rank_matrices {
    uint32_t section_cols = 0;
    uint32_t sections_per_super = 0;
    std::vector<uint64_t> sections;

    static rank_matrices build(const gen_rank_select& grs, uint32_t d);
    // Reassembles row c of superblock sb from the section copy.
    uint64_t row_from_sections(uint64_t sb, uint32_t d, uint32_t c) const;
};

struct range_build_options {
    uint32_t degree = 8; // d, power of two
    std::optional<uint32_t> tau;
};

// Range rank / select / successor over an integer array. Values are remapped
// to rank space through the sorted list of distinct values; queries use one
// root-to-leaf descent of the degree-d tree.
class range_index {
public:
    using options = range_build_options;

    range_index() = default;
    static range_index build(std::span<const int64_t> a, const options& opts = {});

    uint64_t size() const { return n_; }
    uint32_t degree() const { return dt_.degree(); }

    // Positions are 1-based and ranges inclusive. range_rank counts elements
    // of A[i..j] strictly smaller than x.
    uint64_t range_rank(uint64_t i, uint64_t j, int64_t x) const;
    // k-th smallest of A[i..j], 1 <= k <= j-i+1.
    int64_t range_select(uint64_t i, uint64_t j, uint64_t k) const;
    // Smallest value >= c in A[i..j]; absence is a value, not an error.
    std::optional<int64_t> range_successor(uint64_t i, uint64_t j, int64_t c) const;

    const digit_tree& tree() const { return dt_; }
    const std::vector<int64_t>& distinct_values() const { return uniq_; }
    const std::vector<std::vector<rank_matrices>>& matrices() const { return mats_; }

    static range_index from_parts(uint64_t n, std::vector<int64_t> uniq, digit_tree dt);

private:
    void check_range(uint64_t i, uint64_t j) const;
    void build_matrices();
    // Count of elements with remapped value < r in A[i..j].
    uint64_t rank_below(uint64_t i, uint64_t j, uint64_t r) const;

    uint64_t n_ = 0;
    std::vector<int64_t> uniq_;
    digit_tree dt_;
    std::vector<std::vector<rank_matrices>> mats_; // parallel to dt_ levels
};

// One offline range successor query: smallest A[k] >= c with k in [i, j].
struct successor_query {
    uint64_t i = 0;
    uint64_t j = 0;
    int64_t c = 0;
};

struct batch_options {
    std::optional<uint32_t> tau; // default floor(sqrt(log2 sigma)), min 1
};

// Answers all queries with one level-banded sweep over the materialized big
// node subsequences, range min/max tested per query; output order matches the
// input and the answers equal the online ones.
std::vector<std::optional<int64_t>> range_successor_batch(std::span<const int64_t> a,
                                                          std::span<const successor_query> queries,
                                                          const batch_options& opts = {});

} // namespace wavetk

#endif
