#include "wavetk/range_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavetk {

rank_matrices rank_matrices::build(const gen_rank_select& grs, uint32_t d) {
    rank_matrices m;
    m.section_cols = std::max<uint32_t>(8, 64 / d);
    uint32_t stride = m.section_cols - 4;

    std::vector<uint32_t> starts;
    for (uint32_t s = 0;; s += stride) {
        if (s >= 64 - m.section_cols) {
            starts.push_back(64 - m.section_cols);
            break;
        }
        starts.push_back(s);
    }
    m.sections_per_super = uint32_t(starts.size());

    uint64_t words_per_section = (uint64_t(d) * m.section_cols + 63) / 64;
    uint64_t nsb = grs.superblock_count();
    m.sections.assign(nsb * m.sections_per_super * words_per_section, 0);
    for (uint64_t sb = 0; sb < nsb; ++sb) {
        for (uint32_t si = 0; si < m.sections_per_super; ++si) {
            uint32_t start = starts[si];
            uint64_t* out = &m.sections[(sb * m.sections_per_super + si) * words_per_section];
            for (uint32_t c = 0; c < d; ++c) {
                uint64_t row = grs.superblock_row(sb, c);
                uint64_t slice = (row >> (64 - start - m.section_cols)) &
                                 ((m.section_cols == 64) ? ~uint64_t(0)
                                                         : ((uint64_t(1) << m.section_cols) - 1));
                uint64_t bitpos = uint64_t(c) * m.section_cols;
                out[bitpos >> 6] |= slice << (bitpos & 63);
                if ((bitpos & 63) && (bitpos & 63) + m.section_cols > 64)
                    out[(bitpos >> 6) + 1] |= slice >> (64 - (bitpos & 63));
            }
        }
    }
    return m;
}

uint64_t rank_matrices::row_from_sections(uint64_t sb, uint32_t d, uint32_t c) const {
    uint32_t stride = section_cols - 4;
    uint64_t words_per_section = (uint64_t(d) * section_cols + 63) / 64;
    uint64_t row = 0;
    uint32_t covered = 0; // columns assembled so far, from the most significant end
    for (uint32_t si = 0; si < sections_per_super && covered < 64; ++si) {
        uint32_t start = std::min(si * stride, 64 - section_cols);
        const uint64_t* words = &sections[(sb * sections_per_super + si) * words_per_section];
        uint64_t bitpos = uint64_t(c) * section_cols;
        uint64_t slice = words[bitpos >> 6] >> (bitpos & 63);
        if ((bitpos & 63) && (bitpos & 63) + section_cols > 64)
            slice |= words[(bitpos >> 6) + 1] << (64 - (bitpos & 63));
        if (section_cols < 64)
            slice &= (uint64_t(1) << section_cols) - 1;
        // Take the columns this section adds beyond what is already covered.
        uint32_t fresh_lo = std::max(covered, start);
        uint32_t fresh_hi = start + section_cols;
        for (uint32_t col = fresh_lo; col < fresh_hi; ++col) {
            uint64_t bit = (slice >> (start + section_cols - 1 - col)) & 1;
            row |= bit << (63 - col);
        }
        covered = fresh_hi;
    }
    return row;
}

void range_index::check_range(uint64_t i, uint64_t j) const {
    if (i < 1 || i > j || j > n_)
        throw std::invalid_argument("range_index: malformed range");
}

range_index range_index::build(std::span<const int64_t> a, const options& opts) {
    if (opts.degree < 2 || (opts.degree & (opts.degree - 1)) != 0)
        throw std::invalid_argument("range_index: degree must be a power of two >= 2");
    range_index idx;
    idx.n_ = a.size();
    idx.uniq_.assign(a.begin(), a.end());
    std::sort(idx.uniq_.begin(), idx.uniq_.end());
    idx.uniq_.erase(std::unique(idx.uniq_.begin(), idx.uniq_.end()), idx.uniq_.end());
    if (idx.n_ == 0)
        return idx;

    uint32_t g = ceil_log2(opts.degree);
    uint32_t h = ceil_log2(idx.uniq_.size());
    h = (h + g - 1) / g * g; // pad so log2(d) divides the height

    packed_list ranks(std::max<uint32_t>(1, h));
    for (int64_t v : a) {
        auto it = std::lower_bound(idx.uniq_.begin(), idx.uniq_.end(), v);
        ranks.push_back(uint64_t(it - idx.uniq_.begin()));
    }
    if (h == 0)
        return idx; // constant array, no tree needed

    wavelet_build_options wopts;
    wopts.tau = opts.tau;
    wavelet_tree wt = wavelet_tree::build(ranks, uint64_t(1) << h, wopts);
    idx.dt_ = digit_tree::build(wt, opts.degree);
    idx.build_matrices();
    return idx;
}

void range_index::build_matrices() {
    mats_.clear();
    mats_.resize(dt_.level_count());
    for (uint32_t k = 0; k < dt_.level_count(); ++k)
        for (const digit_tree::node& nd : dt_.level(k))
            mats_[k].push_back(rank_matrices::build(nd.grs, dt_.degree()));
}

uint64_t range_index::rank_below(uint64_t i, uint64_t j, uint64_t r) const {
    // Count elements of A[i..j] whose remapped value is < r, r in [0, |U|].
    if (r == 0)
        return 0;
    if (r >= uniq_.size())
        return j - i + 1;
    uint32_t g = dt_.digit_bits();
    uint32_t levels = dt_.level_count();
    uint64_t lo = i - 1, hi = j, prefix = 0, acc = 0;
    for (uint32_t k = 0; k < levels; ++k) {
        const digit_tree::node* nd = dt_.find(k, prefix);
        if (!nd)
            break;
        uint32_t c = uint32_t((r >> ((levels - 1 - k) * g)) & (dt_.degree() - 1));
        if (c > 0)
            acc += nd->grs.rank_le(nd->digits, c - 1, hi) - nd->grs.rank_le(nd->digits, c - 1, lo);
        uint64_t lo2 = nd->grs.rank_eq(nd->digits, c, lo);
        uint64_t hi2 = nd->grs.rank_eq(nd->digits, c, hi);
        if (lo2 == hi2)
            break;
        lo = lo2;
        hi = hi2;
        prefix = (prefix << g) | c;
    }
    return acc;
}

uint64_t range_index::range_rank(uint64_t i, uint64_t j, int64_t x) const {
    check_range(i, j);
    uint64_t r = uint64_t(std::lower_bound(uniq_.begin(), uniq_.end(), x) - uniq_.begin());
    if (uniq_.size() == 1)
        return r == 0 ? 0 : j - i + 1;
    return rank_below(i, j, r);
}

int64_t range_index::range_select(uint64_t i, uint64_t j, uint64_t k) const {
    check_range(i, j);
    if (k < 1 || k > j - i + 1)
        throw std::out_of_range("range_index: selection ordinal out of range");
    if (uniq_.size() == 1)
        return uniq_[0];
    uint32_t g = dt_.digit_bits();
    uint32_t d = dt_.degree();
    uint32_t levels = dt_.level_count();
    uint64_t lo = i - 1, hi = j, prefix = 0, value = 0;
    for (uint32_t k0 = 0; k0 < levels; ++k0) {
        const digit_tree::node* nd = dt_.find(k0, prefix);
        if (!nd)
            throw std::logic_error("range_index: descent reached a missing node");
        uint32_t c = 0;
        uint64_t below = 0;
        for (; c < d; ++c) {
            uint64_t cnt = nd->grs.rank_le(nd->digits, c, hi) - nd->grs.rank_le(nd->digits, c, lo);
            if (cnt >= k)
                break;
            below = cnt;
        }
        if (c == d)
            throw std::logic_error("range_index: selection fell off the alphabet");
        k -= below;
        lo = nd->grs.rank_eq(nd->digits, c, lo);
        hi = nd->grs.rank_eq(nd->digits, c, hi);
        prefix = (prefix << g) | c;
        value = (value << g) | c;
    }
    return uniq_[value];
}

std::optional<int64_t> range_index::range_successor(uint64_t i, uint64_t j, int64_t c) const {
    check_range(i, j);
    uint64_t r = range_rank(i, j, c);
    if (r == j - i + 1)
        return std::nullopt;
    return range_select(i, j, r + 1);
}

range_index range_index::from_parts(uint64_t n, std::vector<int64_t> uniq, digit_tree dt) {
    range_index idx;
    idx.n_ = n;
    idx.uniq_ = std::move(uniq);
    idx.dt_ = std::move(dt);
    idx.build_matrices();
    return idx;
}

} // namespace wavetk
