#ifndef WAVETK_TEXT_INDEX_HPP
#define WAVETK_TEXT_INDEX_HPP

#include "wavetk/range_index.hpp"
#include "wavetk/rmq.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace wavetk {

// A substring of w$ addressed by 1-based inclusive endpoints; position n+1 is
// the sentinel. lo > hi encodes the empty string, which compares smaller than
// every non-empty string.
struct substr {
    uint64_t lo = 1;
    uint64_t hi = 0;

    uint64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
    bool empty() const { return hi < lo; }
    substr prefix(uint64_t len) const {
        if (len == 0 || empty())
            return {1, 0};
        return {lo, std::min(hi, lo + len - 1)};
    }
    substr drop(uint64_t len) const {
        if (len >= size())
            return {1, 0};
        return {lo + len, hi};
    }
    bool operator==(const substr&) const = default;
};

// Suffix array, inverse, LCP table and an RMQ over it for a text over
// [0, sigma); all characters are shifted up by one internally so that the
// sentinel can sit below the alphabet. Positions are 1-based throughout,
// with position n+1 holding the sentinel.
class text_index {
public:
    text_index() = default;
    explicit text_index(std::span<const uint32_t> text);
    static text_index from_bytes(std::string_view text);

    text_index(const text_index&) = delete;
    text_index& operator=(const text_index&) = delete;
    text_index(text_index&&) = default;
    text_index& operator=(text_index&&) = default;

    uint64_t n() const { return n_; }
    uint32_t sigma() const { return sigma_; } // shifted alphabet size (0 = sentinel)

    // Shifted character at position pos in [1, n+1]; 0 is the sentinel.
    uint32_t at(uint64_t pos) const { return t_[pos]; }
    // Character preceding pos, with w[0] read as the sentinel.
    uint32_t prev_char(uint64_t pos) const { return pos == 1 ? 0 : t_[pos - 1]; }

    uint64_t sa(uint64_t rank) const { return sa_[rank]; }       // rank in [1, n+1]
    uint64_t rank_of(uint64_t pos) const { return isa_[pos]; }   // pos in [1, n+1]
    uint32_t lcp_at(uint64_t rank) const { return lcp_[rank]; }  // rank in [2, n+1]

    substr suffix(uint64_t pos) const { return {pos, n_ + 1}; }
    uint64_t suffix_length(uint64_t pos) const { return n_ + 2 - pos; }

    // Longest common prefix of two suffixes given by their start positions.
    uint64_t suffix_lcp(uint64_t a, uint64_t b) const;

    uint64_t lcp(substr x, substr y) const;
    // -1, 0, +1 for x < y, x = y, x > y in lexicographic order.
    int compare(substr x, substr y) const;
    // Comparison of x and y trimmed to their first ell characters.
    int compare_trimmed(substr x, substr y, uint64_t ell) const;

    struct power_lcp {
        uint64_t lcp = 0;
        bool less = false; // x < y^inf
    };
    // lcp(x, y^inf) and the order between x and the infinite power of y.
    power_lcp lcp_with_power(substr x, substr y) const;

    // Index over suffix array values used to enumerate pattern occurrences
    // inside a position window.
    const range_index& sa_values() const { return occ_; }

    // Raw parts for serialization.
    std::span<const uint32_t> text_shifted() const { return {t_.data() + 1, n_ + 1}; }
    static text_index from_parts(std::vector<uint32_t> shifted_text, std::vector<uint32_t> sa);

private:
    void finish_build();

    uint64_t n_ = 0;
    uint32_t sigma_ = 1;
    std::vector<uint32_t> t_;   // 1-based, t_[n+1] = 0
    std::vector<uint32_t> sa_;  // 1-based ranks -> positions
    std::vector<uint32_t> isa_; // positions -> ranks
    std::vector<uint32_t> lcp_; // lcp_[r] = lcp(sa(r-1), sa(r)), r >= 2
    block_rmq lcp_rmq_;
    range_index occ_;
};

} // namespace wavetk

#endif
