#ifndef WAVETK_SCALED_INDEX_HPP
#define WAVETK_SCALED_INDEX_HPP

#include "wavetk/wavelet_suffix_tree.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace wavetk {

// Wavelet suffix trees for covered substrings of several lengths, so that a
// query substring of length m is answered inside a covered substring not much
// longer than needed. The length ladder steps down by s -> ceil(sqrt(2*s)),
// which keeps, for every m, a ladder value inside [2m, 2(m+1)^2] (the top
// scale covering the cases with 2m > n). Ladder values of at most 64 carry no
// trees; such queries are answered by direct sorting of the suffixes.
class scaled_index {
public:
    static constexpr uint64_t kNaiveCutoff = 64;

    scaled_index() = default;
    explicit scaled_index(const text_index& ti);

    const text_index& text() const { return *ti_; }
    uint64_t n() const { return ti_->n(); }

    const std::vector<uint64_t>& ladder() const { return ladder_; }
    // Scale length chosen for query substrings of length m, 1 <= m <= n.
    uint64_t scale_for_length(uint64_t m) const { return table_[m]; }

    uint64_t suffix_rank(substr x, substr y) const;
    substr suffix_select(substr x, uint64_t k) const;
    std::vector<rle_run> bwt_rle(substr x) const;

    // Covered substring chosen for x at its scale, for tests.
    substr covering_window(substr x) const;

private:
    struct covered_tree {
        uint64_t start = 0; // global position of the first character
        uint64_t len = 0;
        std::vector<uint32_t> renumber;         // global shifted char -> local char
        std::vector<uint32_t> inverse_renumber; // local shifted char -> global shifted char
        std::unique_ptr<text_index> local;
        std::unique_ptr<wavelet_suffix_tree> tree;
    };
    struct scale {
        uint64_t len = 0;
        uint64_t step = 0;
        std::vector<covered_tree> trees;
    };

    const covered_tree& tree_for(substr x, const scale*& sc) const;
    const scale* scale_of(uint64_t len) const;

    uint64_t naive_rank(substr x, substr y) const;
    substr naive_select(substr x, uint64_t k) const;
    std::vector<rle_run> naive_bwt(substr x) const;

    const text_index* ti_ = nullptr;
    std::vector<uint64_t> ladder_;
    std::vector<uint64_t> table_; // per length m
    std::vector<scale> scales_;
};

} // namespace wavetk

#endif
