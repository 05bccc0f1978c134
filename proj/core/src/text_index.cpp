#include "wavetk/text_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wavetk {

namespace {

// Suffix array by prefix doubling with radix passes; deterministic.
// `t` is 0-based here and already sentinel-terminated with a unique minimum.
std::vector<uint32_t> suffix_array_doubling(const std::vector<uint32_t>& t) {
    uint64_t m = t.size();
    std::vector<uint32_t> sa(m), rank(m), tmp(m), cnt;
    // Initial ranks by single character.
    uint32_t maxc = 0;
    for (uint32_t c : t)
        maxc = std::max(maxc, c);
    cnt.assign(uint64_t(maxc) + 2, 0);
    for (uint32_t c : t)
        ++cnt[c + 1];
    for (size_t i = 1; i < cnt.size(); ++i)
        cnt[i] += cnt[i - 1];
    for (uint64_t i = 0; i < m; ++i)
        sa[cnt[t[i]]++] = uint32_t(i);
    rank[sa[0]] = 0;
    for (uint64_t i = 1; i < m; ++i)
        rank[sa[i]] = rank[sa[i - 1]] + (t[sa[i]] != t[sa[i - 1]] ? 1 : 0);

    for (uint64_t k = 1; k < m; k <<= 1) {
        if (rank[sa[m - 1]] == m - 1)
            break;
        // Sort by (rank[i], rank[i+k]) with two counting passes.
        auto key2 = [&](uint32_t i) -> uint32_t {
            return i + k < m ? rank[i + k] + 1 : 0;
        };
        std::vector<uint32_t> order(m);
        cnt.assign(m + 2, 0);
        for (uint64_t i = 0; i < m; ++i)
            ++cnt[key2(uint32_t(i)) + 1];
        for (size_t i = 1; i < cnt.size(); ++i)
            cnt[i] += cnt[i - 1];
        for (uint64_t i = 0; i < m; ++i)
            order[cnt[key2(uint32_t(i))]++] = uint32_t(i);
        cnt.assign(m + 1, 0);
        for (uint64_t i = 0; i < m; ++i)
            ++cnt[rank[i] + 1];
        for (size_t i = 1; i < cnt.size(); ++i)
            cnt[i] += cnt[i - 1];
        for (uint64_t i = 0; i < m; ++i)
            sa[cnt[rank[order[i]]]++] = order[i];

        tmp[sa[0]] = 0;
        for (uint64_t i = 1; i < m; ++i) {
            uint32_t a = sa[i - 1], b = sa[i];
            bool same = rank[a] == rank[b] && key2(a) == key2(b);
            tmp[b] = tmp[a] + (same ? 0 : 1);
        }
        rank.swap(tmp);
    }
    return sa;
}

} // namespace

text_index::text_index(std::span<const uint32_t> text) {
    n_ = text.size();
    t_.assign(n_ + 2, 0);
    uint32_t maxc = 0;
    for (uint64_t i = 0; i < n_; ++i) {
        t_[i + 1] = text[i] + 1;
        maxc = std::max(maxc, text[i] + 1);
    }
    sigma_ = maxc + 1;
    t_[n_ + 1] = 0;

    std::vector<uint32_t> t0(t_.begin() + 1, t_.end()); // 0-based copy incl. sentinel
    std::vector<uint32_t> sa0 = suffix_array_doubling(t0);
    sa_.assign(n_ + 2, 0);
    for (uint64_t r = 0; r < sa0.size(); ++r)
        sa_[r + 1] = sa0[r] + 1;
    finish_build();
}

text_index text_index::from_bytes(std::string_view text) {
    std::vector<uint32_t> t(text.size());
    for (size_t i = 0; i < text.size(); ++i)
        t[i] = uint8_t(text[i]);
    return text_index(t);
}

text_index text_index::from_parts(std::vector<uint32_t> shifted_text, std::vector<uint32_t> sa) {
    if (shifted_text.empty() || shifted_text.back() != 0)
        throw std::invalid_argument("text_index: text payload lacks its sentinel");
    text_index ti;
    ti.n_ = shifted_text.size() - 1; // includes the sentinel slot
    ti.t_.assign(ti.n_ + 2, 0);
    std::copy(shifted_text.begin(), shifted_text.end(), ti.t_.begin() + 1);
    uint32_t maxc = 0;
    for (uint32_t c : shifted_text)
        maxc = std::max(maxc, c);
    ti.sigma_ = maxc + 1;
    if (sa.size() != ti.n_ + 1)
        throw std::invalid_argument("text_index: suffix array size mismatch");
    std::vector<bool> seen(ti.n_ + 2, false);
    for (uint32_t pos : sa) {
        if (pos < 1 || pos > ti.n_ + 1 || seen[pos])
            throw std::invalid_argument("text_index: suffix array is not a permutation");
        seen[pos] = true;
    }
    ti.sa_.assign(ti.n_ + 2, 0);
    std::copy(sa.begin(), sa.end(), ti.sa_.begin() + 1);
    ti.finish_build();
    return ti;
}

void text_index::finish_build() {
    uint64_t m = n_ + 1; // suffix count
    isa_.assign(n_ + 2, 0);
    for (uint64_t r = 1; r <= m; ++r)
        isa_[sa_[r]] = uint32_t(r);

    // Kasai's pass for the LCP table.
    lcp_.assign(n_ + 2, 0);
    uint64_t k = 0;
    for (uint64_t pos = 1; pos <= m; ++pos) {
        uint64_t r = isa_[pos];
        if (r == 1) {
            k = 0;
            continue;
        }
        uint64_t prev = sa_[r - 1];
        while (pos + k <= m && prev + k <= m && t_[pos + k] == t_[prev + k])
            ++k;
        lcp_[r] = uint32_t(k);
        if (k)
            --k;
    }
    lcp_rmq_ = block_rmq(std::span<const uint32_t>(lcp_.data(), lcp_.size()));

    // Successor queries over suffix array values drive the occurrence search.
    std::vector<int64_t> vals(m);
    for (uint64_t r = 1; r <= m; ++r)
        vals[r - 1] = int64_t(sa_[r]);
    occ_ = range_index::build(vals);
}

uint64_t text_index::suffix_lcp(uint64_t a, uint64_t b) const {
    if (a == b)
        return suffix_length(a);
    uint64_t ra = isa_[a], rb = isa_[b];
    if (ra > rb)
        std::swap(ra, rb);
    return lcp_rmq_.min_in(ra + 1, rb + 1);
}

uint64_t text_index::lcp(substr x, substr y) const {
    if (x.empty() || y.empty())
        return 0;
    uint64_t cap = std::min(x.size(), y.size());
    if (x.lo == y.lo)
        return cap;
    return std::min(cap, suffix_lcp(x.lo, y.lo));
}

int text_index::compare(substr x, substr y) const {
    uint64_t q = lcp(x, y);
    if (q == x.size() && q == y.size())
        return 0;
    if (q == x.size())
        return -1; // x is a proper prefix of y
    if (q == y.size())
        return 1;
    return t_[x.lo + q] < t_[y.lo + q] ? -1 : 1;
}

int text_index::compare_trimmed(substr x, substr y, uint64_t ell) const {
    // Case split on lcp >= ell; otherwise trimming cannot change the order.
    uint64_t q = lcp(x, y);
    if (q >= ell)
        return 0;
    return compare(x.prefix(ell), y.prefix(ell));
}

text_index::power_lcp text_index::lcp_with_power(substr x, substr y) const {
    if (y.empty())
        throw std::invalid_argument("lcp_with_power: empty period string");
    uint64_t q = lcp(x, y);
    if (q < y.size()) {
        // y is not a prefix of x: order against y settles order against y^inf.
        power_lcp out;
        out.lcp = q;
        out.less = compare(x, y) < 0;
        return out;
    }
    // x = y x'; compare the tail against x itself.
    substr tail = x.drop(y.size());
    power_lcp out;
    out.lcp = y.size() + lcp(tail, x);
    out.less = compare(tail, x) < 0;
    return out;
}

} // namespace wavetk
