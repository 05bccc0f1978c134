#include "wavetk/range_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace wavetk {

namespace {

struct big_level {
    uint32_t depth = 0;
    std::vector<uint64_t> labels;      // sorted
    std::vector<packed_list> lists;    // S_u per label
    std::vector<packed_minmax> minmax; // range min/max over each list

    int64_t index_of(uint64_t label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label)
            return -1;
        return it - labels.begin();
    }
};

struct sweep_event {
    uint64_t pos;
    uint32_t query;
    bool is_hi;
};

} // namespace

std::vector<std::optional<int64_t>> range_successor_batch(std::span<const int64_t> a,
                                                          std::span<const successor_query> queries,
                                                          const batch_options& opts) {
    uint64_t n = a.size();
    for (const successor_query& q : queries)
        if (q.i < 1 || q.i > q.j || q.j > n)
            throw std::invalid_argument("range_successor_batch: malformed query range");

    std::vector<std::optional<int64_t>> out(queries.size());
    if (queries.empty())
        return out;

    std::vector<int64_t> uniq(a.begin(), a.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    uint32_t h = ceil_log2(uniq.size());

    std::vector<uint64_t> rc(queries.size());
    for (size_t qi = 0; qi < queries.size(); ++qi)
        rc[qi] = uint64_t(std::lower_bound(uniq.begin(), uniq.end(), queries[qi].c) - uniq.begin());

    if (h == 0) { // constant array
        for (size_t qi = 0; qi < queries.size(); ++qi)
            out[qi] = rc[qi] == 0 ? std::optional<int64_t>(uniq[0]) : std::nullopt;
        return out;
    }

    uint32_t tau = opts.tau.value_or(std::max<uint32_t>(1, uint32_t(std::sqrt(double(h)))));

    packed_list ranks(h);
    for (int64_t v : a)
        ranks.push_back(uint64_t(std::lower_bound(uniq.begin(), uniq.end(), v) - uniq.begin()));

    big_node_capture capture;
    wavelet_build_options wopts;
    wopts.tau = tau;
    wavelet_tree wt = wavelet_tree::build(ranks, uint64_t(1) << h, wopts, &capture);

    // Materialize the big-node subsequences with their min/max indexes.
    std::vector<big_level> levels;
    for (uint32_t d0 = 0; d0 < h; d0 += tau) {
        big_level lv;
        lv.depth = d0;
        for (auto& [key, list] : capture.lists) {
            if (key.first != d0)
                continue;
            lv.labels.push_back(key.second);
            lv.minmax.emplace_back(list);
            lv.lists.push_back(std::move(list));
        }
        levels.push_back(std::move(lv));
    }
    capture.lists.clear();
    uint32_t nb = uint32_t(levels.size());

    // Inherited range of every query at every big level, as counts into S_u.
    std::vector<std::vector<uint64_t>> lo(nb, std::vector<uint64_t>(queries.size(), 0));
    std::vector<std::vector<uint64_t>> hi(nb, std::vector<uint64_t>(queries.size(), 0));
    for (size_t qi = 0; qi < queries.size(); ++qi) {
        lo[0][qi] = queries[qi].i - 1;
        hi[0][qi] = queries[qi].j;
    }

    for (uint32_t b = 0; b + 1 < nb; ++b) {
        uint32_t depth = levels[b].depth;
        // Bucket both endpoints of each live query onto its ancestor's list.
        std::vector<std::vector<sweep_event>> events(levels[b].labels.size());
        for (size_t qi = 0; qi < queries.size(); ++qi) {
            if (rc[qi] >= uniq.size())
                continue;
            uint64_t label = rc[qi] >> (h - depth);
            int64_t node = levels[b].index_of(label);
            if (node < 0)
                continue; // no elements below this ancestor at all
            events[node].push_back({lo[b][qi], uint32_t(qi), false});
            events[node].push_back({hi[b][qi], uint32_t(qi), true});
        }
        for (size_t node = 0; node < events.size(); ++node) {
            auto& evs = events[node];
            if (evs.empty())
                continue;
            std::stable_sort(evs.begin(), evs.end(),
                             [](const sweep_event& x, const sweep_event& y) { return x.pos < y.pos; });
            const packed_list& s = levels[b].lists[node];
            std::vector<uint64_t> cnt(uint64_t(1) << tau, 0);
            size_t ei = 0;
            uint64_t len = s.size();
            for (uint64_t p = 0; p <= len; ++p) {
                for (; ei < evs.size() && evs[ei].pos == p; ++ei) {
                    uint32_t qi = evs[ei].query;
                    uint64_t t = (rc[qi] >> (h - depth - tau)) & ((uint64_t(1) << tau) - 1);
                    (evs[ei].is_hi ? hi : lo)[b + 1][qi] = cnt[t];
                }
                if (p < len) {
                    uint64_t v = s.get(p);
                    uint64_t t = (v >> (h - depth - tau)) & ((uint64_t(1) << tau) - 1);
                    ++cnt[t];
                }
            }
        }
    }

    const node_bits& bits = wt.bitmasks();
    auto child_ranges = [&](uint32_t depth, uint64_t label, uint64_t l, uint64_t r, uint64_t& l0,
                            uint64_t& r0, uint64_t& l1, uint64_t& r1) {
        uint64_t node = wavelet_tree::heap_node(depth, label);
        l0 = bits.rank0(node, l);
        r0 = bits.rank0(node, r);
        l1 = l - l0;
        r1 = r - r0;
    };

    for (size_t qi = 0; qi < queries.size(); ++qi) {
        if (rc[qi] >= uniq.size()) {
            out[qi] = std::nullopt; // threshold above every value
            continue;
        }
        uint64_t target = rc[qi];

        // Lowest big ancestor whose slice still holds a value >= target.
        int32_t vstar = -1;
        for (int32_t b = int32_t(nb) - 1; b >= 0; --b) {
            uint64_t label = target >> (h - levels[b].depth);
            int64_t node = levels[b].index_of(label);
            if (node < 0)
                continue;
            uint64_t l = lo[b][qi], r = hi[b][qi];
            if (l >= r)
                continue;
            if (levels[b].minmax[node].max_in(levels[b].lists[node], l, r) >= target) {
                vstar = b;
                break;
            }
        }
        if (vstar < 0) {
            out[qi] = std::nullopt;
            continue;
        }

        // Walk toward the target leaf through the band below vstar, keeping
        // the deepest left turn whose right sibling range is non-empty.
        uint32_t depth = levels[vstar].depth;
        uint64_t label = target >> (h - depth);
        uint64_t l = lo[vstar][qi], r = hi[vstar][qi];
        uint32_t stop = std::min(h, depth + tau);
        bool have_w = false;
        uint32_t w_depth = 0;
        uint64_t w_label = 0, w_l = 0, w_r = 0;
        bool done = false;
        while (depth < stop) {
            uint64_t l0, r0, l1, r1;
            child_ranges(depth, label, l, r, l0, r0, l1, r1);
            bool bit = (target >> (h - depth - 1)) & 1;
            if (!bit && r1 > l1) {
                have_w = true;
                w_depth = depth + 1;
                w_label = (label << 1) | 1;
                w_l = l1;
                w_r = r1;
            }
            label = (label << 1) | (bit ? 1 : 0);
            l = bit ? l1 : l0;
            r = bit ? r1 : r0;
            ++depth;
            if (depth == h && l < r) {
                out[qi] = uniq[target]; // the threshold value itself is present
                done = true;
                break;
            }
        }
        if (done)
            continue;
        if (!have_w)
            throw std::logic_error("range_successor_batch: lost the successor subtree");

        // Leftmost non-empty descent from the recorded right sibling, cut
        // short by a range minimum query at the next big node.
        depth = w_depth;
        label = w_label;
        l = w_l;
        r = w_r;
        while (depth < h) {
            if (depth % tau == 0 && depth < h) {
                uint32_t b = depth / tau;
                int64_t node = levels[b].index_of(label);
                if (node < 0)
                    throw std::logic_error("range_successor_batch: missing big node on descent");
                out[qi] = uniq[levels[b].minmax[node].min_in(levels[b].lists[node], l, r)];
                break;
            }
            uint64_t l0, r0, l1, r1;
            child_ranges(depth, label, l, r, l0, r0, l1, r1);
            bool go_right = (r0 == l0);
            label = (label << 1) | (go_right ? 1 : 0);
            l = go_right ? l1 : l0;
            r = go_right ? r1 : r0;
            ++depth;
        }
        if (depth == h)
            out[qi] = uniq[label];
    }
    return out;
}

} // namespace wavetk
