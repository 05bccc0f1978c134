#include "wavetk/digit_tree.hpp"

#include "wavetk/chunk_tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavetk {

gen_rank_select::gen_rank_select(const packed_list& digits, uint32_t degree)
    : d_(degree), gbits_(ceil_log2(degree)) {
    uint64_t n = digits.size();
    uint64_t sb_len = superblock_len();
    uint64_t nsb = n / sb_len + 1;
    uint64_t nblk = n / kBlockLen + 1;
    sb_.assign(nsb * d_, 0);
    blk_.assign(nblk * d_, 0);

    std::vector<uint64_t> cum(d_, 0); // cumulative counts of digits <= c
    uint64_t sb_base_idx = 0;
    std::vector<uint64_t> sb_base(d_, 0);
    for (uint64_t pos = 0; pos <= n; ++pos) {
        if (pos % sb_len == 0) {
            sb_base_idx = pos / sb_len;
            for (uint32_t c = 0; c < d_; ++c) {
                sb_[sb_base_idx * d_ + c] = cum[c];
                sb_base[c] = cum[c];
            }
        }
        if (pos % kBlockLen == 0) {
            uint64_t b = pos / kBlockLen;
            for (uint32_t c = 0; c < d_; ++c)
                blk_[b * d_ + c] = uint32_t(cum[c] - sb_base[c]);
        }
        if (pos < n) {
            uint64_t v = digits.get(pos);
            for (uint32_t c = uint32_t(v); c < d_; ++c)
                ++cum[c];
        }
    }
}

uint64_t gen_rank_select::rank_le(const packed_list& digits, uint32_t c, uint64_t i) const {
    if (c >= d_)
        throw std::out_of_range("gen_rank_select: symbol out of alphabet");
    uint64_t blk = i / kBlockLen;
    uint64_t r = sb_[(i / superblock_len()) * d_ + c] + blk_[blk * d_ + c];
    uint64_t pos = blk * kBlockLen;
    if (gbits_ <= 8) {
        const tables::genrank_table& tab = tables::genrank_for(gbits_);
        uint32_t per = tab.entries_per_chunk;
        for (; pos + per <= i; pos += per)
            r += tab.count_le(digits.read_bits(pos * gbits_, per * gbits_), c);
    }
    for (; pos < i; ++pos)
        if (digits.get(pos) <= c)
            ++r;
    return r;
}

uint64_t gen_rank_select::select_eq(const packed_list& digits, uint32_t c, uint64_t k) const {
    uint64_t total = rank_eq(digits, c, digits.size());
    if (k < 1 || k > total)
        throw std::out_of_range("gen_rank_select: select ordinal out of range");
    uint64_t lo = 1, hi = digits.size(); // smallest i with rank_eq(i) >= k
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (rank_eq(digits, c, mid) >= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

namespace {

// Temporary digit string of a binary node delta levels above the band floor,
// built by interleaving the children's strings according to the bitmask, with
// the branch bit prepended to every character (lem. about rebuilding D_u).
packed_list rebuild_digits(const wavelet_tree& wt, uint32_t depth, uint64_t label,
                           uint32_t delta, uint32_t g) {
    const node_bits& bits = wt.bitmasks();
    uint64_t v = wavelet_tree::heap_node(depth, label);
    packed_list out(g);
    uint64_t len = bits.size(v);
    if (len == 0)
        return out;
    if (delta == 1) {
        for (uint64_t i = 0; i < len; ++i)
            out.push_back(bits.get(v, i) ? 1 : 0);
        return out;
    }
    packed_list d0 = rebuild_digits(wt, depth + 1, label << 1, delta - 1, g);
    packed_list d1 = rebuild_digits(wt, depth + 1, (label << 1) | 1, delta - 1, g);
    d1.or_bit_in_every_entry(delta - 1);

    // Merge by the node's bitmask, reading it in 16-bit chunks and keeping
    // word-buffered cursors into both inputs.
    uint64_t c0 = 0, c1 = 0;
    uint64_t i = 0;
    for (; i + 16 <= len; i += 16) {
        uint64_t chunk = 0;
        for (uint32_t b = 0; b < 16; ++b)
            chunk |= uint64_t(bits.get(v, i + b)) << b;
        for (uint32_t b = 0; b < 16; ++b) {
            if ((chunk >> b) & 1)
                out.append_entries(d1.get(c1++), 1);
            else
                out.append_entries(d0.get(c0++), 1);
        }
    }
    for (; i < len; ++i) {
        if (bits.get(v, i))
            out.append_entries(d1.get(c1++), 1);
        else
            out.append_entries(d0.get(c0++), 1);
    }
    return out;
}

} // namespace

digit_tree digit_tree::build(const wavelet_tree& wt, uint32_t d) {
    if (d < 2 || (d & (d - 1)) != 0)
        throw std::invalid_argument("digit_tree: degree must be a power of two >= 2");
    uint32_t g = ceil_log2(d);
    uint32_t h = wt.height();
    if (h % g != 0)
        throw std::invalid_argument("digit_tree: log2(d) must divide the padded tree height");

    digit_tree dt;
    dt.d_ = d;
    dt.g_ = g;
    dt.n_ = wt.size();
    uint32_t levels = h / g;
    dt.levels_.resize(levels);

    // Walk the existing binary nodes level band by level band; a digit node
    // exists where the binary node at depth k*g holds a non-empty bitmask.
    for (uint32_t k = 0; k < levels; ++k) {
        uint32_t depth = k * g;
        std::vector<std::pair<uint64_t, uint64_t>> alive; // (label, element count)
        if (k == 0) {
            alive.emplace_back(0, wt.size());
        } else {
            for (const node& parent : dt.levels_[k - 1]) {
                for (uint32_t c = 0; c < d; ++c) {
                    uint64_t cnt = parent.grs.rank_eq(parent.digits, c, parent.digits.size());
                    if (cnt)
                        alive.emplace_back((parent.prefix << g) | c, cnt);
                }
            }
        }
        for (auto& [label, cnt] : alive) {
            (void)cnt;
            node nd;
            nd.prefix = label;
            nd.digits = rebuild_digits(wt, depth, label, g, g);
            if (nd.digits.empty())
                continue;
            nd.grs = gen_rank_select(nd.digits, d);
            dt.levels_[k].push_back(std::move(nd));
        }
        std::sort(dt.levels_[k].begin(), dt.levels_[k].end(),
                  [](const node& a, const node& b) { return a.prefix < b.prefix; });
    }
    return dt;
}

const digit_tree::node* digit_tree::find(uint32_t level, uint64_t prefix) const {
    if (level >= levels_.size())
        return nullptr;
    const auto& v = levels_[level];
    auto it = std::lower_bound(v.begin(), v.end(), prefix,
                               [](const node& a, uint64_t p) { return a.prefix < p; });
    if (it == v.end() || it->prefix != prefix)
        return nullptr;
    return &*it;
}

uint64_t digit_tree::gen_rank(uint32_t level, uint64_t prefix, uint32_t c, uint64_t i) const {
    const node* nd = find(level, prefix);
    if (!nd)
        return 0;
    return nd->grs.rank_le(nd->digits, c, i);
}

uint64_t digit_tree::gen_select(uint32_t level, uint64_t prefix, uint32_t c, uint64_t k) const {
    const node* nd = find(level, prefix);
    if (!nd)
        throw std::out_of_range("digit_tree: no such node");
    return nd->grs.select_eq(nd->digits, c, k);
}

digit_tree digit_tree::from_parts(uint32_t d, uint64_t n, std::vector<std::vector<node>> levels) {
    digit_tree dt;
    dt.d_ = d;
    dt.g_ = ceil_log2(d);
    dt.n_ = n;
    dt.levels_ = std::move(levels);
    for (auto& lv : dt.levels_)
        for (auto& nd : lv)
            nd.grs = gen_rank_select(nd.digits, d);
    return dt;
}

} // namespace wavetk
