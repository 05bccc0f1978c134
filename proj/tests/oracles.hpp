#ifndef WAVETK_TESTS_ORACLES_HPP
#define WAVETK_TESTS_ORACLES_HPP

// Brute-force reference implementations the test suites check against. These
// deliberately avoid the library's query paths: everything here is direct
// scanning, sorting or enumeration over plain vectors.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

// Bitmasks of the perfect binary wavelet tree, keyed by (depth, path label),
// built by the textbook per-symbol recursion.
std::map<std::pair<uint32_t, uint64_t>, std::string>
naive_wavelet_bitmasks(const std::vector<uint64_t>& s, uint32_t height);

// Count of values < x in a[i..j], 1-based inclusive.
uint64_t scan_range_rank(const std::vector<int64_t>& a, uint64_t i, uint64_t j, int64_t x);
// k-th smallest of a[i..j].
int64_t sort_range_select(const std::vector<int64_t>& a, uint64_t i, uint64_t j, uint64_t k);
// Smallest value >= c in a[i..j].
std::optional<int64_t> scan_range_successor(const std::vector<int64_t>& a, uint64_t i, uint64_t j,
                                            int64_t c);

// Plain character-wise comparison helpers over byte strings.
uint64_t scan_lcp(const std::string& x, const std::string& y);
int scan_compare(const std::string& x, const std::string& y);
int scan_compare_trimmed(const std::string& x, const std::string& y, uint64_t ell);
// lcp(x, y^inf) and whether x < y^inf, by expanding the power far enough.
std::pair<uint64_t, bool> scan_power(const std::string& x, const std::string& y);

// Start positions of y inside x (x given with its offset into w).
std::vector<uint64_t> scan_occurrences(const std::string& w, uint64_t x_lo, uint64_t x_hi,
                                       const std::string& y);

// All distinct substrings of w$ in lexicographic order, sentinel rendered as
// '\0' (below every byte used by the tests).
std::vector<std::string> sorted_distinct_substrings(const std::string& w);

// Suffixes of w[i..j] sorted lexicographically, as start positions.
std::vector<uint64_t> sorted_suffix_starts(const std::string& w, uint64_t i, uint64_t j);

// Run-length encoded BWT of x = w[i..j]; character 0 stands for the sentinel.
std::vector<std::pair<uint32_t, uint64_t>> naive_bwt_rle(const std::string& w, uint64_t i,
                                                         uint64_t j);

std::string random_string(uint64_t seed, uint64_t n, uint32_t sigma);

} // namespace oracle

#endif
