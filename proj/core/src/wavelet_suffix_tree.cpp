#include "wavetk/wavelet_suffix_tree.hpp"

#include "wavetk/shaped_wavelet.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wavetk {

namespace {

thread_local uint64_t g_bwt_edges = 0;

// Ordered multiway tree rebuilt from the weighted depths of consecutive-leaf
// LCAs, by the usual stack pass.
struct lca_arena {
    struct nd {
        int64_t depth = 0;
        int32_t leaf = -1; // 0-based leaf index, -1 for inner nodes
        std::vector<uint32_t> kids;
    };
    std::vector<nd> a;
    uint32_t root = 0;
};

lca_arena build_from_lca(const std::vector<int64_t>& L) {
    lca_arena ar;
    size_t nleaves = L.size() + 1;
    ar.a.reserve(2 * nleaves);
    for (size_t i = 0; i < nleaves; ++i) {
        lca_arena::nd leaf;
        leaf.depth = INT64_MAX;
        leaf.leaf = int32_t(i);
        ar.a.push_back(std::move(leaf));
    }
    std::vector<uint32_t> stack;
    uint32_t cur = 0; // leaf 0
    for (size_t m = 0; m < L.size(); ++m) {
        int64_t d = L[m];
        while (!stack.empty() && ar.a[stack.back()].depth > d) {
            uint32_t nd = stack.back();
            stack.pop_back();
            ar.a[nd].kids.push_back(cur);
            cur = nd;
        }
        if (!stack.empty() && ar.a[stack.back()].depth == d) {
            ar.a[stack.back()].kids.push_back(cur);
        } else {
            lca_arena::nd inner;
            inner.depth = d;
            inner.kids.push_back(cur);
            ar.a.push_back(std::move(inner));
            stack.push_back(uint32_t(ar.a.size() - 1));
        }
        cur = uint32_t(m + 1); // next leaf
    }
    while (!stack.empty()) {
        uint32_t nd = stack.back();
        stack.pop_back();
        ar.a[nd].kids.push_back(cur);
        cur = nd;
    }
    ar.root = cur;
    return ar;
}

// Weight-balanced replacement tree: a full binary tree over k ordered slots
// whose slot depths are O(1 + log(W / w_i)). Built from the LCA sequence
// P - p_i, with an extra middle leaf per inner node, then dissolved and split
// back to a full binary tree.
struct rep_tree {
    struct nd {
        // Children reference either another rep node (>= 0) or a slot (~slot).
        int32_t left = 0;
        int32_t right = 0;
    };
    std::vector<nd> a;
    int32_t root = 0; // same encoding as children
};

rep_tree build_replacement(const std::vector<uint64_t>& w) {
    size_t k = w.size();
    std::vector<uint64_t> W(k + 1, 0);
    for (size_t i = 0; i < k; ++i)
        W[i + 1] = W[i] + w[i];
    std::vector<int64_t> p(k + 1, 0);
    int64_t P = 0;
    for (size_t i = 1; i <= k; ++i) {
        p[i] = 63 - std::countl_zero(W[i - 1] ^ W[i]);
        P = std::max(P, p[i]);
    }
    std::vector<int64_t> L(k);
    for (size_t i = 1; i <= k; ++i)
        L[i - 1] = P - p[i];
    lca_arena ar = build_from_lca(L); // k+1 dummy leaves, binary by construction

    // In-order slot numbering of the inner nodes, middle-leaf insertion,
    // dummy removal and the ternary split, all fused into one recursion.
    rep_tree rt;
    uint32_t next_slot = 0;
    auto transform = [&](auto&& self, uint32_t v) -> int32_t {
        const lca_arena::nd& nd = ar.a[v];
        if (nd.leaf >= 0)
            return INT32_MIN; // dummy leaf, dissolves away
        if (nd.kids.size() != 2)
            throw std::logic_error("wavelet_suffix_tree: replacement tree is not binary");
        int32_t l = self(self, nd.kids[0]);
        int32_t mid = ~int32_t(next_slot++);
        int32_t r = self(self, nd.kids[1]);
        int32_t kids[3];
        int n = 0;
        if (l != INT32_MIN)
            kids[n++] = l;
        kids[n++] = mid;
        if (r != INT32_MIN)
            kids[n++] = r;
        if (n == 1)
            return kids[0];
        if (n == 2) {
            rt.a.push_back({kids[0], kids[1]});
            return int32_t(rt.a.size() - 1);
        }
        rt.a.push_back({kids[0], kids[1]});
        int32_t u2 = int32_t(rt.a.size() - 1);
        rt.a.push_back({u2, kids[2]});
        return int32_t(rt.a.size() - 1);
    };
    rt.root = transform(transform, ar.root);
    if (next_slot != k)
        throw std::logic_error("wavelet_suffix_tree: replacement slot count mismatch");
    return rt;
}

} // namespace

wavelet_suffix_tree::wavelet_suffix_tree(const text_index& ti) : ti_(&ti) {
    uint64_t n = ti.n();
    uint64_t nleaves = n + 1;

    // LCA depths of consecutive suffixes: floor(log2 lcp), shifted up by one
    // so that lcp 0 lands at depth 0 and the level is always 1 << depth.
    std::vector<int64_t> L(nleaves - 1);
    for (uint64_t m = 1; m < nleaves; ++m) {
        uint32_t l = ti.lcp_at(m + 1);
        L[m - 1] = l == 0 ? 0 : int64_t(63 - std::countl_zero(uint64_t(l))) + 1;
    }
    lca_arena ar = build_from_lca(L);

    // Leaf counts per arena node for the weight-balanced replacements.
    std::vector<uint64_t> weight(ar.a.size(), 0);
    {
        std::vector<std::pair<uint32_t, size_t>> stack{{ar.root, 0}};
        while (!stack.empty()) {
            auto& [v, ki] = stack.back();
            const auto& nd = ar.a[v];
            if (nd.leaf >= 0) {
                weight[v] = 1;
                stack.pop_back();
                continue;
            }
            if (ki < nd.kids.size()) {
                stack.emplace_back(nd.kids[ki], 0);
                ++ki;
            } else {
                for (uint32_t kid : nd.kids)
                    weight[v] += weight[kid];
                stack.pop_back();
            }
        }
    }

    // Binarize into the final node array; replacement inner nodes inherit the
    // level of the node they expand.
    nodes_.clear();
    auto emit = [&](auto&& self, uint32_t aid) -> uint32_t {
        const lca_arena::nd& nd = ar.a[aid];
        uint32_t id = uint32_t(nodes_.size());
        nodes_.emplace_back();
        if (nd.leaf >= 0)
            return id; // level and leaf range are filled by the rank pass
        nodes_[id].level = uint64_t(1) << nd.depth;
        if (nd.kids.size() == 2) {
            uint32_t l = self(self, nd.kids[0]);
            uint32_t r = self(self, nd.kids[1]);
            nodes_[id].left = l;
            nodes_[id].right = r;
            return id;
        }
        std::vector<uint64_t> w(nd.kids.size());
        for (size_t i = 0; i < nd.kids.size(); ++i)
            w[i] = weight[nd.kids[i]];
        rep_tree rt = build_replacement(w);
        uint64_t level = nodes_[id].level;
        auto place = [&](auto&& pl, int32_t ref, uint32_t into) -> void {
            const rep_tree::nd& rnd = rt.a[ref];
            auto side = [&](int32_t child) -> uint32_t {
                if (child < 0 && child != INT32_MIN)
                    return self(self, nd.kids[~child]);
                uint32_t cid = uint32_t(nodes_.size());
                nodes_.emplace_back();
                nodes_[cid].level = level;
                pl(pl, child, cid);
                return cid;
            };
            uint32_t l = side(rnd.left);
            uint32_t r = side(rnd.right);
            nodes_[into].left = l;
            nodes_[into].right = r;
        };
        if (rt.root < 0)
            throw std::logic_error("wavelet_suffix_tree: degenerate replacement tree");
        place(place, rt.root, id);
        return id;
    };
    root_ = emit(emit, ar.root);

    finish_build();
}

void wavelet_suffix_tree::finish_build() {
    const text_index& ti = *ti_;
    uint64_t n = ti.n();
    uint64_t nleaves = n + 1;

    // Left-to-right leaf ranks, leaf levels, subtree ranges and the height.
    struct frame {
        uint32_t v;
        uint32_t d;
        bool post;
    };
    std::vector<frame> stack{{root_, 0, false}};
    uint32_t next_rank = 1;
    height_ = 0;
    while (!stack.empty()) {
        frame f = stack.back();
        stack.pop_back();
        tnode& nd = nodes_[f.v];
        if (nd.left == knil) {
            nd.leaf_lo = nd.leaf_hi = next_rank++;
            nd.level = 2 * ti.suffix_length(ti.sa(nd.leaf_lo));
            height_ = std::max(height_, f.d);
            continue;
        }
        if (!f.post) {
            stack.push_back({f.v, f.d, true});
            stack.push_back({nd.right, f.d + 1, false});
            stack.push_back({nd.left, f.d + 1, false});
        } else {
            nd.leaf_lo = nodes_[nd.left].leaf_lo;
            nd.leaf_hi = nodes_[nd.right].leaf_hi;
        }
    }
    if (next_rank != nleaves + 1)
        throw std::logic_error("wavelet_suffix_tree: leaf count mismatch");

    check_observation_clauses();

    // Bitmasks through the shaped wavelet tree builder: leaves carry symbols
    // (start position - 1), the first ordering is by start position and the
    // second by (preceding character, start position).
    if (nleaves > 1) {
        std::vector<tree_shape::node> snodes(nodes_.size());
        for (uint32_t v = 0; v < nodes_.size(); ++v) {
            if (nodes_[v].left != knil) {
                snodes[v].left = int32_t(nodes_[v].left);
                snodes[v].right = int32_t(nodes_[v].right);
            } else {
                snodes[v].symbol = int64_t(ti.sa(nodes_[v].leaf_lo) - 1);
            }
        }
        tree_shape shape(std::move(snodes), root_);

        std::vector<uint64_t> s1(nleaves);
        for (uint64_t pos = 1; pos <= nleaves; ++pos)
            s1[pos - 1] = pos - 1;
        pos_bits_ = build_shaped_bitmasks(s1, shape);

        std::vector<uint64_t> order(nleaves);
        for (uint64_t pos = 1; pos <= nleaves; ++pos)
            order[pos - 1] = pos;
        std::stable_sort(order.begin(), order.end(), [&](uint64_t a, uint64_t b) {
            return std::make_pair(ti.prev_char(a), a) < std::make_pair(ti.prev_char(b), b);
        });
        std::vector<uint64_t> s2(nleaves);
        for (uint64_t m = 0; m < nleaves; ++m)
            s2[m] = order[m] - 1;
        chr_bits_ = build_shaped_bitmasks(s2, shape);

        char_starts_.assign(order.begin(), order.end());
    } else {
        pos_bits_.resize_nodes(1);
        chr_bits_.resize_nodes(1);
        char_starts_.assign(1, 1);
    }

    char_bucket_.assign(ti.sigma() + 1, 0);
    for (uint32_t pos : char_starts_)
        ++char_bucket_[ti.prev_char(pos) + 1];
    for (size_t c = 1; c < char_bucket_.size(); ++c)
        char_bucket_[c] += char_bucket_[c - 1];

    compute_prefix_windows();
}

void wavelet_suffix_tree::compute_prefix_windows() {
    pfx_win_.assign(nodes_.size(), {});
    for (uint32_t v = 0; v < nodes_.size(); ++v) {
        substr p = common_prefix(v);
        if (!p.empty())
            pfx_win_[v] = pattern_sa_window(*ti_, p);
    }
}

void wavelet_suffix_tree::check_observation_clauses() const {
    const text_index& ti = *ti_;
    // (1) levels never decrease downward; (2) subtree boundaries break before
    // the parent level; (3) suffixes under a node share half its level.
    std::vector<std::pair<uint32_t, uint64_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto [v, parent_level] = stack.back();
        stack.pop_back();
        const tnode& nd = nodes_[v];
        if (parent_level > nd.level)
            throw std::logic_error("wavelet_suffix_tree: level decreases along a path");
        if (v != root_) {
            if (nd.leaf_lo > 1 && ti.lcp_at(nd.leaf_lo) >= parent_level)
                throw std::logic_error("wavelet_suffix_tree: left boundary violates locality");
            if (nd.leaf_hi < leaf_count() && ti.lcp_at(nd.leaf_hi + 1) >= parent_level)
                throw std::logic_error("wavelet_suffix_tree: right boundary violates locality");
        }
        uint64_t shared = ti.suffix_lcp(ti.sa(nd.leaf_lo), ti.sa(nd.leaf_hi));
        if (shared < nd.level / 2)
            throw std::logic_error("wavelet_suffix_tree: subtree prefix shorter than half level");
        if (nd.left != knil) {
            stack.emplace_back(nd.left, nd.level);
            stack.emplace_back(nd.right, nd.level);
        }
    }
}

string_interval wavelet_suffix_tree::node_interval(uint32_t v) const {
    const tnode& nd = nodes_[v];
    return {ti_->suffix(min_start(v)), ti_->suffix(max_start(v)), nd.level, false, false};
}

string_interval wavelet_suffix_tree::edge_interval(uint32_t parent, uint32_t child) const {
    const tnode& p = nodes_[parent];
    if (child == p.left)
        return {ti_->suffix(min_start(parent)), ti_->suffix(max_start(p.left)), p.level, false,
                false};
    if (child == p.right)
        return {ti_->suffix(max_start(p.left)), ti_->suffix(max_start(parent)), p.level, true,
                false};
    throw std::invalid_argument("wavelet_suffix_tree: not an edge");
}

substr wavelet_suffix_tree::common_prefix(uint32_t v) const {
    const tnode& nd = nodes_[v];
    uint64_t plen = std::min<uint64_t>(ti_->suffix_lcp(min_start(v), max_start(v)), nd.level);
    if (plen == 0)
        return {1, 0};
    return {min_start(v), min_start(v) + plen - 1};
}

std::vector<progression> wavelet_suffix_tree::suffix_positions_in_edge(uint64_t a, uint64_t b,
                                                                       uint32_t parent,
                                                                       uint32_t child) const {
    std::vector<progression> out;
    if (a > b)
        return out;
    substr p = common_prefix(child);
    if (p.empty())
        throw std::logic_error("wavelet_suffix_tree: empty prefix with a non-empty range");
    uint64_t win_hi = std::min(ti_->n() + 1, b + p.size() - 1);
    string_interval ie = edge_interval(parent, child);
    for (const progression& occ :
         occurrences_in_window(*ti_, {a, win_hi}, p.size(), pfx_win_[child])) {
        filter_result kept = filter_progression(*ti_, occ, ti_->n() + 1, ie);
        if (!kept.kept.empty())
            out.push_back(kept.kept);
    }
    if (out.size() > 2)
        throw std::logic_error("wavelet_suffix_tree: more than two suffix-range progressions");
    return out;
}

progression wavelet_suffix_tree::short_suffixes_in_edge(substr x, uint32_t parent,
                                                        uint32_t child) const {
    uint64_t cap = nodes_[parent].level;
    uint64_t m = std::min(x.size(), cap == 0 ? 0 : cap - 1);
    if (m == 0)
        return {};
    substr p = common_prefix(parent);
    if (p.empty())
        throw std::logic_error("wavelet_suffix_tree: short-suffix search without a prefix");
    substr window{x.hi - m + 1, x.hi};
    std::vector<progression> occ = occurrences_in_window(*ti_, window, p.size(), pfx_win_[parent]);
    if (occ.size() > 1)
        throw std::logic_error("wavelet_suffix_tree: short suffixes split into two runs");
    if (occ.empty())
        return {};
    return filter_progression(*ti_, occ[0], x.hi, edge_interval(parent, child)).kept;
}

progression wavelet_suffix_tree::remove_child_members(const progression& p, uint64_t j,
                                                      uint32_t child) const {
    if (p.empty())
        return p;
    filter_result inside = filter_progression(*ti_, p, j, node_interval(child));
    if (inside.index_hi == inside.index_lo)
        return p;
    bool head = inside.index_lo > 0;
    bool tail = inside.index_hi < p.count;
    if (head && tail)
        throw std::logic_error("wavelet_suffix_tree: edge members are not one-sided");
    if (head)
        return p.slice(0, inside.index_lo);
    if (tail)
        return p.slice(inside.index_hi, p.count);
    return {};
}

edge_suffixes wavelet_suffix_tree::edge_suffix_list(substr x, uint32_t parent,
                                                    uint32_t child) const {
    edge_suffixes out;
    out.end = x.hi;
    if (x.empty())
        return out;

    // Suffixes shorter than the parent level, one progression.
    progression shorts = remove_child_members(short_suffixes_in_edge(x, parent, child), x.hi, child);

    // Suffixes between the parent and child levels, via their full-suffix
    // proxies in the position range [j - l(child) + 2, j - l(parent) + 1].
    uint64_t lp = nodes_[parent].level;
    uint64_t lc = nodes_[child].level;
    std::vector<progression> longs;
    if (lc > lp) {
        uint64_t a = x.hi + 2 > lc ? x.hi + 2 - lc : 1;
        a = std::max(a, x.lo);
        uint64_t b = x.hi + 1 - lp; // x.hi >= lp would be needed; guard below
        if (x.hi + 1 > lp && a <= b) {
            for (const progression& pr : suffix_positions_in_edge(a, b, parent, child)) {
                progression kept = remove_child_members(pr, x.hi, child);
                if (!kept.empty())
                    longs.push_back(kept);
            }
        }
    }

    // Ascending suffix length: the short run first, then the long runs with
    // larger start positions ahead of smaller ones.
    if (!shorts.empty())
        out.parts.push_back(shorts);
    std::sort(longs.begin(), longs.end(),
              [](const progression& a, const progression& b) { return a.start > b.start; });
    for (const progression& pr : longs)
        out.parts.push_back(pr);
    for (const progression& pr : out.parts)
        out.total += pr.count;
    return out;
}

uint64_t wavelet_suffix_tree::count_side(substr x, uint32_t parent, uint32_t child, uint64_t lo,
                                         uint64_t hi) const {
    const tnode& p = nodes_[parent];
    bool right = child == p.right;
    uint64_t ones = pos_bits_.rank1(parent, hi) - pos_bits_.rank1(parent, lo);
    uint64_t in_seg = right ? ones : (hi - lo) - ones;

    uint64_t total = in_seg;
    if (p.level >= 2 && !x.empty()) {
        uint64_t a = x.hi + 2 > p.level ? x.hi + 2 - p.level : 1;
        a = std::max(a, x.lo);
        if (a <= x.hi)
            for (const progression& pr : suffix_positions_in_edge(a, x.hi, parent, child))
                total -= pr.count;
        total += short_suffixes_in_edge(x, parent, child).count;
    }
    return total;
}

uint64_t wavelet_suffix_tree::count_progression_prev(const progression& p, uint32_t chr) const {
    if (p.empty())
        return 0;
    uint64_t cnt = ti_->prev_char(p.start) == chr ? 1 : 0;
    if (p.count >= 2 && ti_->prev_char(p.term(1)) == chr)
        cnt += p.count - 1;
    return cnt;
}

uint64_t wavelet_suffix_tree::count_side_char(substr x, uint32_t parent, uint32_t child,
                                              uint32_t chr, uint64_t lo, uint64_t hi) const {
    const tnode& p = nodes_[parent];
    bool right = child == p.right;
    uint64_t ones = chr_bits_.rank1(parent, hi) - chr_bits_.rank1(parent, lo);
    uint64_t in_seg = right ? ones : (hi - lo) - ones;

    uint64_t total = in_seg;
    if (p.level >= 2 && !x.empty()) {
        uint64_t a = x.hi + 2 > p.level ? x.hi + 2 - p.level : 1;
        a = std::max(a, x.lo);
        if (a <= x.hi)
            for (const progression& pr : suffix_positions_in_edge(a, x.hi, parent, child))
                total -= count_progression_prev(pr, chr);
        total += count_progression_prev(short_suffixes_in_edge(x, parent, child), chr);
    }
    return total;
}

std::vector<rle_run> wavelet_suffix_tree::edge_preceding_rle(substr x, uint32_t parent,
                                                             uint32_t child) const {
    edge_suffixes list = edge_suffix_list(x, parent, child);
    std::vector<rle_run> out;
    auto push = [&](uint32_t c, uint64_t len) {
        if (len == 0)
            return;
        if (!out.empty() && out.back().chr == c)
            out.back().len += len;
        else
            out.push_back({c, len});
    };
    for (const progression& p : list.parts) {
        if (p.count >= 2)
            push(ti_->prev_char(p.term(1)), p.count - 1); // shared by all later terms
        push(ti_->prev_char(p.start), 1);
    }
    return out;
}

std::pair<uint64_t, uint64_t> wavelet_suffix_tree::root_char_segment(uint32_t chr, uint64_t i,
                                                                     uint64_t j) const {
    uint64_t blo = char_bucket_[chr];
    uint64_t bhi = char_bucket_[chr + 1];
    const uint32_t* base = char_starts_.data();
    const uint32_t* lo = std::lower_bound(base + blo, base + bhi, uint32_t(i));
    const uint32_t* hi = std::upper_bound(base + blo, base + bhi, uint32_t(j));
    return {uint64_t(lo - base), uint64_t(hi - base)};
}

namespace {

class local_suffix_order : public suffix_order {
public:
    local_suffix_order(const text_index& ti, substr y) : ti_(&ti), y_(y) {}
    int suffix_vs_y(uint64_t suffix_start) const override {
        return ti_->compare(ti_->suffix(suffix_start), y_);
    }
    int window_vs_y(uint64_t lo, uint64_t hi) const override {
        return ti_->compare({lo, hi}, y_);
    }

private:
    const text_index* ti_;
    substr y_;
};

} // namespace

uint64_t wavelet_suffix_tree::suffix_rank(substr x, substr y) const {
    return suffix_rank(x, local_suffix_order(*ti_, y));
}

uint64_t wavelet_suffix_tree::suffix_rank(substr x, const suffix_order& y) const {
    if (x.empty() || x.hi > ti_->n())
        throw std::invalid_argument("wavelet_suffix_tree: bad query substring");
    uint64_t nl = leaf_count();

    // Leftmost leaf whose suffix exceeds y; suffixes never equal a substring.
    uint64_t lo = 1, hi = nl + 1;
    while (lo < hi) {
        uint64_t mid = (lo + hi) / 2;
        if (y.suffix_vs_y(ti_->sa(mid)) > 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    uint64_t target = lo;
    if (target > nl)
        return x.size(); // every suffix of w$ precedes y, so every suffix of x does

    uint64_t ans = 0;
    uint32_t u = root_;
    uint64_t seg_lo = x.lo - 1, seg_hi = x.hi;
    bool past_y = false;
    while (!is_leaf(u)) {
        const tnode& nd = nodes_[u];
        uint32_t next = target <= nodes_[nd.left].leaf_hi ? nd.left : nd.right;
        if (next == nd.right)
            ans += count_side(x, u, nd.left, seg_lo, seg_hi);
        if (!past_y) {
            edge_suffixes list = edge_suffix_list(x, u, next);
            for (const progression& part : list.parts) {
                // Longest element first settles whole parts quickly.
                if (y.window_vs_y(part.start, x.hi) < 0) {
                    ans += part.count;
                    continue;
                }
                uint64_t plo = 0, phi = part.count; // count of elements < y
                while (plo < phi) {
                    uint64_t mid = (plo + phi) / 2; // ascending length order
                    if (y.window_vs_y(part.term(part.count - 1 - mid), x.hi) < 0)
                        plo = mid + 1;
                    else
                        phi = mid;
                }
                ans += plo;
                if (plo < part.count) {
                    past_y = true;
                    break;
                }
            }
        }
        uint64_t ones_lo = pos_bits_.rank1(u, seg_lo);
        uint64_t ones_hi = pos_bits_.rank1(u, seg_hi);
        if (next == nd.left) {
            seg_lo -= ones_lo;
            seg_hi -= ones_hi;
        } else {
            seg_lo = ones_lo;
            seg_hi = ones_hi;
        }
        u = next;
    }
    return ans;
}

substr wavelet_suffix_tree::suffix_select(substr x, uint64_t k) const {
    if (x.empty() || x.hi > ti_->n())
        throw std::invalid_argument("wavelet_suffix_tree: bad query substring");
    if (k < 1 || k > x.size())
        throw std::out_of_range("wavelet_suffix_tree: suffix ordinal out of range");
    uint32_t u = root_;
    uint64_t seg_lo = x.lo - 1, seg_hi = x.hi;
    uint64_t accounted = 0;
    while (!is_leaf(u)) {
        const tnode& nd = nodes_[u];
        uint64_t left_count = count_side(x, u, nd.left, seg_lo, seg_hi);
        uint32_t next;
        if (accounted + left_count >= k) {
            next = nd.left;
        } else {
            next = nd.right;
            accounted += left_count;
        }
        edge_suffixes list = edge_suffix_list(x, u, next);
        if (accounted + list.total >= k)
            return {list.nth_start(k - accounted - 1), x.hi};
        accounted += list.total;
        uint64_t ones_lo = pos_bits_.rank1(u, seg_lo);
        uint64_t ones_hi = pos_bits_.rank1(u, seg_hi);
        if (next == nd.left) {
            seg_lo -= ones_lo;
            seg_hi -= ones_hi;
        } else {
            seg_lo = ones_lo;
            seg_hi = ones_hi;
        }
        u = next;
    }
    throw std::logic_error("wavelet_suffix_tree: selection reached a leaf");
}

std::vector<rle_run> wavelet_suffix_tree::bwt_rle(substr x) const {
    if (x.empty() || x.hi > ti_->n())
        throw std::invalid_argument("wavelet_suffix_tree: bad query substring");
    g_bwt_edges = 0;

    std::vector<rle_run> runs;
    auto push = [&](uint32_t c, uint64_t len) {
        if (len == 0)
            return;
        if (!runs.empty() && runs.back().chr == c)
            runs.back().len += len;
        else
            runs.push_back({c, len});
    };
    push(ti_->at(x.hi), 1); // b0, the last character of x

    struct level_state {
        uint32_t node;
        uint64_t s1_lo, s1_hi;
        uint64_t s2_lo, s2_hi;
    };
    std::vector<level_state> path;
    uint32_t seg_char = ti_->at(x.hi);
    path.push_back({root_, x.lo - 1, x.hi, 0, 0});
    {
        auto [l2, h2] = root_char_segment(seg_char, x.lo, x.hi);
        path[0].s2_lo = l2;
        path[0].s2_hi = h2;
    }

    auto refresh_second_segments = [&](uint32_t chr) {
        if (chr == seg_char)
            return;
        seg_char = chr;
        auto [l2, h2] = root_char_segment(chr, x.lo, x.hi);
        path[0].s2_lo = l2;
        path[0].s2_hi = h2;
        for (size_t d = 1; d < path.size(); ++d) {
            const level_state& up = path[d - 1];
            uint64_t ones_lo = chr_bits_.rank1(up.node, up.s2_lo);
            uint64_t ones_hi = chr_bits_.rank1(up.node, up.s2_hi);
            if (path[d].node == nodes_[up.node].left) {
                path[d].s2_lo = up.s2_lo - ones_lo;
                path[d].s2_hi = up.s2_hi - ones_hi;
            } else {
                path[d].s2_lo = ones_lo;
                path[d].s2_hi = ones_hi;
            }
        }
    };

    auto dfs = [&](auto&& self) -> void {
        const level_state cur = path.back();
        if (is_leaf(cur.node))
            return;
        const tnode& nd = nodes_[cur.node];
        for (uint32_t child : {nd.left, nd.right}) {
            uint64_t q_all = count_side(x, cur.node, child, cur.s1_lo, cur.s1_hi);
            if (q_all == 0)
                continue;
            uint32_t c = runs.back().chr;
            refresh_second_segments(c);
            uint64_t q_c = count_side_char(x, cur.node, child, c, path.back().s2_lo,
                                           path.back().s2_hi);
            if (q_c == q_all) {
                push(c, q_all); // the whole side keeps the current run going
                continue;
            }
            ++g_bwt_edges;
            for (const rle_run& r : edge_preceding_rle(x, cur.node, child))
                push(r.chr, r.len);

            refresh_second_segments(runs.back().chr);
            const level_state& top = path.back();
            level_state down;
            down.node = child;
            uint64_t p_lo = pos_bits_.rank1(cur.node, top.s1_lo);
            uint64_t p_hi = pos_bits_.rank1(cur.node, top.s1_hi);
            uint64_t c_lo = chr_bits_.rank1(cur.node, top.s2_lo);
            uint64_t c_hi = chr_bits_.rank1(cur.node, top.s2_hi);
            if (child == nd.left) {
                down.s1_lo = top.s1_lo - p_lo;
                down.s1_hi = top.s1_hi - p_hi;
                down.s2_lo = top.s2_lo - c_lo;
                down.s2_hi = top.s2_hi - c_hi;
            } else {
                down.s1_lo = p_lo;
                down.s1_hi = p_hi;
                down.s2_lo = c_lo;
                down.s2_hi = c_hi;
            }
            path.push_back(down);
            self(self);
            path.pop_back();
        }
    };
    dfs(dfs);

    // Replace the placeholder preceding character of x itself by the
    // sentinel; its index is one substring suffix rank query away.
    uint64_t fix = suffix_rank(x, x) + 1;
    std::vector<rle_run> fixed;
    uint64_t covered = 0;
    for (const rle_run& r : runs) {
        if (fix >= covered && fix < covered + r.len) {
            uint64_t before = fix - covered;
            if (before)
                fixed.push_back({r.chr, before});
            if (fixed.empty() || fixed.back().chr != 0)
                fixed.push_back({0, 1});
            else
                fixed.back().len += 1;
            uint64_t after = r.len - before - 1;
            if (after) {
                if (fixed.back().chr == r.chr)
                    fixed.back().len += after;
                else
                    fixed.push_back({r.chr, after});
            }
        } else if (!fixed.empty() && fixed.back().chr == r.chr) {
            fixed.back().len += r.len;
        } else {
            fixed.push_back(r);
        }
        covered += r.len;
    }
    return fixed;
}

uint64_t wavelet_suffix_tree::last_bwt_edge_count() {
    return g_bwt_edges;
}

wavelet_suffix_tree wavelet_suffix_tree::from_parts(const text_index& ti, std::vector<tnode> nodes,
                                                    uint32_t root, node_bits pos, node_bits chr) {
    wavelet_suffix_tree t;
    t.ti_ = &ti;
    t.nodes_ = std::move(nodes);
    t.root_ = root;
    t.pos_bits_ = std::move(pos);
    t.chr_bits_ = std::move(chr);

    // Recompute the derived pieces and the height; the observation checks run
    // again as cheap structural validation of the payload.
    std::vector<std::pair<uint32_t, uint32_t>> stack{{t.root_, 0}};
    t.height_ = 0;
    while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        t.height_ = std::max(t.height_, d);
        if (t.nodes_[v].left != knil) {
            stack.emplace_back(t.nodes_[v].left, d + 1);
            stack.emplace_back(t.nodes_[v].right, d + 1);
        }
    }
    t.check_observation_clauses();

    uint64_t nleaves = ti.n() + 1;
    std::vector<uint64_t> order(nleaves);
    for (uint64_t pos2 = 1; pos2 <= nleaves; ++pos2)
        order[pos2 - 1] = pos2;
    std::stable_sort(order.begin(), order.end(), [&](uint64_t a, uint64_t b) {
        return std::make_pair(ti.prev_char(a), a) < std::make_pair(ti.prev_char(b), b);
    });
    t.char_starts_.assign(order.begin(), order.end());
    t.char_bucket_.assign(ti.sigma() + 1, 0);
    for (uint32_t p : t.char_starts_)
        ++t.char_bucket_[ti.prev_char(p) + 1];
    for (size_t c = 1; c < t.char_bucket_.size(); ++c)
        t.char_bucket_[c] += t.char_bucket_[c - 1];
    t.compute_prefix_windows();
    return t;
}

} // namespace wavetk
