#include "oracles.hpp"

#include <algorithm>
#include <random>

namespace oracle {

namespace {

void naive_wavelet_rec(const std::vector<uint64_t>& s, uint32_t height, uint32_t depth,
                       uint64_t label,
                       std::map<std::pair<uint32_t, uint64_t>, std::string>& out) {
    if (depth == height || s.empty())
        return;
    std::string bits;
    std::vector<uint64_t> zeros, ones;
    for (uint64_t v : s) {
        bool b = (v >> (height - 1 - depth)) & 1;
        bits += b ? '1' : '0';
        (b ? ones : zeros).push_back(v);
    }
    out[{depth, label}] = bits;
    naive_wavelet_rec(zeros, height, depth + 1, label << 1, out);
    naive_wavelet_rec(ones, height, depth + 1, (label << 1) | 1, out);
}

} // namespace

std::map<std::pair<uint32_t, uint64_t>, std::string>
naive_wavelet_bitmasks(const std::vector<uint64_t>& s, uint32_t height) {
    std::map<std::pair<uint32_t, uint64_t>, std::string> out;
    naive_wavelet_rec(s, height, 0, 0, out);
    return out;
}

uint64_t scan_range_rank(const std::vector<int64_t>& a, uint64_t i, uint64_t j, int64_t x) {
    uint64_t c = 0;
    for (uint64_t k = i; k <= j; ++k)
        c += a[k - 1] < x;
    return c;
}

int64_t sort_range_select(const std::vector<int64_t>& a, uint64_t i, uint64_t j, uint64_t k) {
    std::vector<int64_t> slice(a.begin() + i - 1, a.begin() + j);
    std::sort(slice.begin(), slice.end());
    return slice[k - 1];
}

std::optional<int64_t> scan_range_successor(const std::vector<int64_t>& a, uint64_t i, uint64_t j,
                                            int64_t c) {
    std::optional<int64_t> best;
    for (uint64_t k = i; k <= j; ++k)
        if (a[k - 1] >= c && (!best || a[k - 1] < *best))
            best = a[k - 1];
    return best;
}

uint64_t scan_lcp(const std::string& x, const std::string& y) {
    uint64_t q = 0;
    while (q < x.size() && q < y.size() && x[q] == y[q])
        ++q;
    return q;
}

int scan_compare(const std::string& x, const std::string& y) {
    if (x == y)
        return 0;
    return x < y ? -1 : 1;
}

int scan_compare_trimmed(const std::string& x, const std::string& y, uint64_t ell) {
    return scan_compare(x.substr(0, ell), y.substr(0, ell));
}

std::pair<uint64_t, bool> scan_power(const std::string& x, const std::string& y) {
    std::string power;
    while (power.size() < x.size() + y.size())
        power += y;
    uint64_t q = scan_lcp(x, power);
    bool less = x < power || q == x.size(); // a finite prefix is smaller
    return {q, less};
}

std::vector<uint64_t> scan_occurrences(const std::string& w, uint64_t x_lo, uint64_t x_hi,
                                       const std::string& y) {
    std::vector<uint64_t> out;
    if (y.empty() || x_hi < x_lo || x_hi - x_lo + 1 < y.size())
        return out;
    for (uint64_t k = x_lo; k + y.size() - 1 <= x_hi; ++k)
        if (w.compare(k - 1, y.size(), y) == 0)
            out.push_back(k);
    return out;
}

std::vector<std::string> sorted_distinct_substrings(const std::string& w) {
    std::string ws = w + '\0';
    std::vector<std::string> subs;
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t len = 1; i + len <= ws.size(); ++len) {
            if (ws[i] == '\0' && len > 1)
                break;
            if (i + len <= w.size() || i + len == ws.size())
                subs.push_back(ws.substr(i, len));
        }
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    return subs;
}

std::vector<uint64_t> sorted_suffix_starts(const std::string& w, uint64_t i, uint64_t j) {
    std::vector<uint64_t> starts;
    for (uint64_t p = i; p <= j; ++p)
        starts.push_back(p);
    std::sort(starts.begin(), starts.end(), [&](uint64_t a, uint64_t b) {
        return w.substr(a - 1, j - a + 1) < w.substr(b - 1, j - b + 1);
    });
    return starts;
}

std::vector<std::pair<uint32_t, uint64_t>> naive_bwt_rle(const std::string& w, uint64_t i,
                                                         uint64_t j) {
    // Sorted suffixes of x$: the bare sentinel first, then the x suffixes in
    // plain order (appending the sentinel never reorders distinct suffixes).
    std::vector<uint64_t> starts = sorted_suffix_starts(w, i, j);
    std::vector<uint32_t> b;
    b.push_back(uint32_t(uint8_t(w[j - 1])) + 1); // precedes the sentinel
    for (uint64_t p : starts)
        b.push_back(p == i ? 0 : uint32_t(uint8_t(w[p - 2])) + 1);
    std::vector<std::pair<uint32_t, uint64_t>> rle;
    for (uint32_t c : b) {
        if (!rle.empty() && rle.back().first == c)
            ++rle.back().second;
        else
            rle.emplace_back(c, 1);
    }
    return rle;
}

std::string random_string(uint64_t seed, uint64_t n, uint32_t sigma) {
    std::mt19937_64 rng(seed);
    std::string s(n, 'a');
    for (auto& c : s)
        c = char('a' + rng() % sigma);
    return s;
}

} // namespace oracle
