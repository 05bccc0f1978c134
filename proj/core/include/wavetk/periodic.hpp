#ifndef WAVETK_PERIODIC_HPP
#define WAVETK_PERIODIC_HPP

#include "wavetk/text_index.hpp"

#include <cstdint>
#include <vector>

namespace wavetk {

// Positions p0 < p0+d < ... < p0+k*d with all the between-terms substrings
// equal. A single position is a progression of count 1 with any difference.
struct progression {
    uint64_t start = 0;
    uint64_t diff = 1;
    uint64_t count = 0;

    uint64_t term(uint64_t idx) const { return start + idx * diff; }
    uint64_t back() const { return term(count - 1); }
    bool empty() const { return count == 0; }

    progression slice(uint64_t lo, uint64_t hi) const { // index range [lo, hi)
        if (hi <= lo)
            return {};
        return {term(lo), diff, hi - lo};
    }
    std::vector<uint64_t> terms() const {
        std::vector<uint64_t> out(count);
        for (uint64_t i = 0; i < count; ++i)
            out[i] = term(i);
        return out;
    }
};

// The set of strings z with low ~<_trim z ~<_trim high, each side closed or
// open. Endpoints are substrings of w$; an empty endpoint compares below
// every non-empty string.
struct string_interval {
    substr low;
    substr high;
    uint64_t trim = 1;
    bool low_open = false;
    bool high_open = false;
};

bool interval_contains(const text_index& ti, const string_interval& iv, substr z);

struct filter_result {
    progression kept;
    uint64_t index_lo = 0; // index range of the kept terms in the input
    uint64_t index_hi = 0;
};

// Keeps exactly the terms p_i with w[p_i..j] inside the interval, returned as
// a single progression. Implements the case analysis on lcp(x_i, rho^inf)
// against lcp(endpoint, rho^inf), relying on the monotonicity of the x_i.
filter_result filter_progression(const text_index& ti, const progression& p, uint64_t j,
                                 const string_interval& iv);

// Suffix-array rank interval [lower, upper) of the suffixes starting with a
// given pattern; reusable across every window the pattern is searched in.
struct sa_window {
    uint64_t lower = 1;
    uint64_t upper = 1;
    bool empty() const { return lower >= upper; }
};
sa_window pattern_sa_window(const text_index& ti, substr y);

// All occurrences of y inside x as non-overlapping periodic progressions in
// increasing position order, grouped greedily: maximal runs of equal gaps no
// larger than |y| merge into one progression. Callers keep |x| <= max_ratio *
// (|y|+1), which bounds the result by ceil((|x|+1)/(|y|+1)) progressions.
std::vector<progression> occurrences(const text_index& ti, substr x, substr y,
                                     uint64_t max_ratio = 4);

// Same, with the pattern's suffix-array interval already at hand.
std::vector<progression> occurrences_in_window(const text_index& ti, substr x,
                                               uint64_t pattern_len, sa_window win);

} // namespace wavetk

#endif
