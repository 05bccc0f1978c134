#include "wavetk/periodic.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavetk {

bool interval_contains(const text_index& ti, const string_interval& iv, substr z) {
    int lo = ti.compare_trimmed(z, iv.low, iv.trim);
    if (lo < 0 || (lo == 0 && iv.low_open))
        return false;
    int hi = ti.compare_trimmed(z, iv.high, iv.trim);
    if (hi > 0 || (hi == 0 && iv.high_open))
        return false;
    return true;
}

namespace {

// Trichotomy of cmp(x_i, endpoint) under the trim, as constant pieces over
// the index range [0, count).
struct cmp_piece {
    uint64_t lo, hi;
    int value;
};

std::vector<cmp_piece> classify_against(const text_index& ti, const progression& p, uint64_t j,
                                        substr endpoint, uint64_t ell, uint64_t r0, bool x0less) {
    uint64_t count = p.count;
    std::vector<cmp_piece> pieces;
    if (endpoint.empty()) {
        // Every x_i is non-empty, hence above the empty endpoint.
        pieces.push_back({0, count, 1});
        return pieces;
    }
    substr rho{p.start, p.start + p.diff - 1};
    auto [rp, sless] = ti.lcp_with_power(endpoint, rho);
    uint64_t d = p.diff;

    auto x_of = [&](uint64_t i) { return substr{p.term(i), j}; };

    if (rp >= ell) {
        uint64_t a = 0;
        if (r0 >= ell)
            a = std::min(count, (r0 - ell) / d + 1);
        if (a > 0)
            pieces.push_back({0, a, 0});
        if (a < count)
            pieces.push_back({a, count, x0less ? -1 : 1});
        return pieces;
    }

    uint64_t b = 0;
    if (r0 > rp)
        b = std::min(count, (r0 - rp + d - 1) / d);
    if (b > 0)
        pieces.push_back({0, b, sless ? 1 : -1});
    uint64_t next = b;
    if (b < count && r0 >= rp && (r0 - rp) % d == 0 && (r0 - rp) / d == b) {
        // The single index whose prefix of rho^inf is exactly as long as the
        // endpoint's; settle it by one direct trimmed comparison.
        pieces.push_back({b, b + 1, ti.compare_trimmed(x_of(b), endpoint, ell)});
        next = b + 1;
    }
    if (next < count)
        pieces.push_back({next, count, x0less ? -1 : 1});
    return pieces;
}

} // namespace

filter_result filter_progression(const text_index& ti, const progression& p, uint64_t j,
                                 const string_interval& iv) {
    if (iv.trim < 1)
        throw std::invalid_argument("filter_progression: trim must be positive");
    filter_result out;
    if (p.count == 0)
        return out;
    if (p.back() > j)
        throw std::invalid_argument("filter_progression: progression runs past the window end");

    if (p.count == 1) {
        if (interval_contains(ti, iv, {p.start, j})) {
            out.kept = {p.start, 1, 1};
            out.index_lo = 0;
            out.index_hi = 1;
        }
        return out;
    }

    substr rho{p.start, p.start + p.diff - 1};
    auto [r0, x0less] = ti.lcp_with_power({p.start, j}, rho);

    std::vector<cmp_piece> low = classify_against(ti, p, j, iv.low, iv.trim, r0, x0less);
    std::vector<cmp_piece> high = classify_against(ti, p, j, iv.high, iv.trim, r0, x0less);

    auto value_at = [](const std::vector<cmp_piece>& pieces, uint64_t i) {
        for (const cmp_piece& pc : pieces)
            if (i >= pc.lo && i < pc.hi)
                return pc.value;
        throw std::logic_error("filter_progression: classification gap");
    };

    // Piece boundaries split [0, count) into at most a handful of intervals
    // with constant membership; the kept set must come out contiguous because
    // the string sequence x_i is monotone.
    std::vector<uint64_t> cuts{0, p.count};
    for (const auto& pcs : {low, high})
        for (const cmp_piece& pc : pcs) {
            cuts.push_back(pc.lo);
            cuts.push_back(pc.hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    bool found = false;
    uint64_t lo_idx = 0, hi_idx = 0;
    for (size_t s = 0; s + 1 < cuts.size(); ++s) {
        uint64_t a = cuts[s], b = cuts[s + 1];
        if (a >= p.count || a >= b)
            continue;
        int cl = value_at(low, a);
        int ch = value_at(high, a);
        bool ok = (cl > 0 || (cl == 0 && !iv.low_open)) && (ch < 0 || (ch == 0 && !iv.high_open));
        if (!ok)
            continue;
        if (!found) {
            found = true;
            lo_idx = a;
            hi_idx = b;
        } else if (a == hi_idx) {
            hi_idx = b;
        } else {
            throw std::logic_error("filter_progression: kept set is not contiguous");
        }
    }
    if (found) {
        out.kept = p.slice(lo_idx, hi_idx);
        if (out.kept.count == 1)
            out.kept.diff = 1;
        out.index_lo = lo_idx;
        out.index_hi = hi_idx;
    }
    return out;
}

sa_window pattern_sa_window(const text_index& ti, substr y) {
    if (y.empty())
        throw std::invalid_argument("pattern_sa_window: empty pattern");
    uint64_t m = ti.n() + 1;
    uint64_t ylen = y.size();
    auto trimmed = [&](uint64_t rank) { return ti.compare_trimmed(ti.suffix(ti.sa(rank)), y, ylen); };
    uint64_t lo = 1, hi = m + 1; // first rank with suffix >=_trim y
    while (lo < hi) {
        uint64_t mid = (lo + hi) / 2;
        if (trimmed(mid) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    sa_window win;
    win.lower = lo;
    hi = m + 1; // first rank with suffix >_trim y
    while (lo < hi) {
        uint64_t mid = (lo + hi) / 2;
        if (trimmed(mid) <= 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    win.upper = lo;
    return win;
}

std::vector<progression> occurrences(const text_index& ti, substr x, substr y,
                                     uint64_t max_ratio) {
    if (y.empty())
        throw std::invalid_argument("occurrences: empty pattern");
    if (x.size() > max_ratio * (y.size() + 1))
        throw std::invalid_argument("occurrences: window longer than the configured multiple "
                                    "of the pattern length");
    if (x.empty() || x.size() < y.size())
        return {};
    return occurrences_in_window(ti, x, y.size(), pattern_sa_window(ti, y));
}

std::vector<progression> occurrences_in_window(const text_index& ti, substr x,
                                               uint64_t pattern_len, sa_window win) {
    std::vector<progression> out;
    uint64_t ylen = pattern_len;
    if (win.empty() || x.empty() || x.size() < ylen)
        return out;
    uint64_t lower = win.lower, upper = win.upper;

    // Ascending positions inside the window. Small suffix-array intervals
    // are cheapest to read off directly; larger ones are walked with one
    // range successor query per occurrence.
    uint64_t last_start = x.hi - ylen + 1;
    std::vector<uint64_t> pos;
    if (upper - lower <= 32) {
        for (uint64_t r = lower; r < upper; ++r) {
            uint64_t p = ti.sa(r);
            if (p >= x.lo && p <= last_start)
                pos.push_back(p);
        }
        std::sort(pos.begin(), pos.end());
    } else {
        int64_t cur = int64_t(x.lo);
        const range_index& sa_vals = ti.sa_values();
        while (true) {
            std::optional<int64_t> nxt = sa_vals.range_successor(lower, upper - 1, cur);
            if (!nxt || uint64_t(*nxt) > last_start)
                break;
            pos.push_back(uint64_t(*nxt));
            cur = *nxt + 1;
        }
    }

    // Greedy grouping: a maximal run of equal gaps merges into one
    // progression whenever the gap is at most |y|, which makes every block
    // between consecutive terms a prefix of y and hence all blocks equal.
    size_t i = 0;
    while (i < pos.size()) {
        if (i + 1 < pos.size()) {
            uint64_t g = pos[i + 1] - pos[i];
            if (g <= ylen) {
                size_t e = i + 1;
                while (e + 1 < pos.size() && pos[e + 1] - pos[e] == g)
                    ++e;
                out.push_back({pos[i], g, e - i + 1});
                i = e + 1;
                continue;
            }
        }
        out.push_back({pos[i], 1, 1});
        ++i;
    }
    return out;
}

} // namespace wavetk
