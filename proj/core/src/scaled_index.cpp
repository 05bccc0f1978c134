#include "wavetk/scaled_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavetk {

namespace {

uint64_t ceil_sqrt2(uint64_t s) {
    auto r = uint64_t(std::ceil(std::sqrt(2.0 * double(s))));
    while (r * r < 2 * s)
        ++r;
    while (r > 1 && (r - 1) * (r - 1) >= 2 * s)
        --r;
    return r;
}

// Compares y, given over the enclosing text, against suffixes of the local
// text v$ whose characters come from a window of the enclosing text.
class cross_suffix_order : public suffix_order {
public:
    cross_suffix_order(const text_index& global, uint64_t start, uint64_t len, substr y)
        : g_(&global), start_(start), len_(len), y_(y) {}

    int suffix_vs_y(uint64_t local_start) const override {
        if (local_start > len_) // the bare sentinel suffix
            return y_.empty() ? 1 : -1;
        substr part{start_ + local_start - 1, start_ + len_ - 1};
        int c = g_->compare(part, y_);
        return c == 0 ? 1 : c; // the sentinel makes the suffix the longer one
    }
    int window_vs_y(uint64_t lo, uint64_t hi) const override {
        return g_->compare({start_ + lo - 1, start_ + hi - 1}, y_);
    }

private:
    const text_index* g_;
    uint64_t start_, len_;
    substr y_;
};

} // namespace

scaled_index::scaled_index(const text_index& ti) : ti_(&ti) {
    uint64_t n = ti.n();

    // Length ladder down to 3; strictly decreasing.
    uint64_t s = n;
    while (s >= 3) {
        ladder_.push_back(s);
        uint64_t nxt = ceil_sqrt2(s);
        if (nxt >= s)
            break;
        s = nxt;
    }
    if (ladder_.empty() || ladder_.back() > 2)
        if (n >= 2)
            ladder_.push_back(2);
    std::sort(ladder_.begin(), ladder_.end());
    ladder_.erase(std::unique(ladder_.begin(), ladder_.end()), ladder_.end());

    // Smallest ladder value at least min(2m, n), per query length m.
    table_.assign(n + 1, n);
    for (uint64_t m = 1; m <= n; ++m) {
        uint64_t want = std::min(2 * m, n);
        auto it = std::lower_bound(ladder_.begin(), ladder_.end(), want);
        table_[m] = it == ladder_.end() ? n : *it;
    }

    // Trees for every ladder length above the cutoff: windows every
    // floor(len/2) positions plus the one ending at the text end.
    for (uint64_t len : ladder_) {
        if (len <= kNaiveCutoff || len > n)
            continue;
        scale sc;
        sc.len = len;
        sc.step = std::max<uint64_t>(1, len / 2);
        std::vector<uint64_t> starts;
        for (uint64_t st = 1; st + len - 1 <= n; st += sc.step)
            starts.push_back(st);
        if (starts.empty() || starts.back() != n - len + 1)
            starts.push_back(n - len + 1);
        for (uint64_t st : starts) {
            covered_tree ct;
            ct.start = st;
            ct.len = len;
            // Renumber the window to a compact local alphabet.
            std::vector<uint32_t> chars(len);
            for (uint64_t k = 0; k < len; ++k)
                chars[k] = ti.at(st + k);
            std::vector<uint32_t> sorted = chars;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            ct.renumber.assign(ti.sigma(), 0);
            ct.inverse_renumber.assign(sorted.size() + 1, 0);
            for (uint32_t r = 0; r < sorted.size(); ++r) {
                ct.renumber[sorted[r]] = r;
                ct.inverse_renumber[r + 1] = sorted[r]; // +1 for the local shift
            }
            std::vector<uint32_t> local_text(len);
            for (uint64_t k = 0; k < len; ++k)
                local_text[k] = ct.renumber[chars[k]];
            ct.local = std::make_unique<text_index>(local_text);
            ct.tree = std::make_unique<wavelet_suffix_tree>(*ct.local);
            sc.trees.push_back(std::move(ct));
        }
        scales_.push_back(std::move(sc));
    }
    std::sort(scales_.begin(), scales_.end(),
              [](const scale& a, const scale& b) { return a.len < b.len; });
}

const scaled_index::scale* scaled_index::scale_of(uint64_t len) const {
    for (const scale& sc : scales_)
        if (sc.len == len)
            return &sc;
    return nullptr;
}

const scaled_index::covered_tree& scaled_index::tree_for(substr x, const scale*& out) const {
    uint64_t m = x.size();
    uint64_t len = table_[m];
    const scale* sc = scale_of(len);
    if (!sc)
        throw std::logic_error("scaled_index: no trees at the selected scale");
    out = sc;
    uint64_t t = (x.lo - 1) / sc->step;
    if (t < sc->trees.size()) {
        const covered_tree& ct = sc->trees[t];
        if (ct.start <= x.lo && x.hi <= ct.start + ct.len - 1)
            return ct;
    }
    const covered_tree& last = sc->trees.back();
    if (last.start <= x.lo && x.hi <= last.start + last.len - 1)
        return last;
    throw std::logic_error("scaled_index: query substring escapes the covered windows");
}

substr scaled_index::covering_window(substr x) const {
    if (x.empty() || x.hi > n())
        throw std::invalid_argument("scaled_index: bad query substring");
    if (table_[x.size()] <= kNaiveCutoff)
        return x;
    const scale* sc = nullptr;
    const covered_tree& ct = tree_for(x, sc);
    return {ct.start, ct.start + ct.len - 1};
}

uint64_t scaled_index::suffix_rank(substr x, substr y) const {
    if (x.empty() || x.hi > n())
        throw std::invalid_argument("scaled_index: bad query substring");
    if (table_[x.size()] <= kNaiveCutoff)
        return naive_rank(x, y);
    const scale* sc = nullptr;
    const covered_tree& ct = tree_for(x, sc);
    substr lx{x.lo - ct.start + 1, x.hi - ct.start + 1};
    return ct.tree->suffix_rank(lx, cross_suffix_order(*ti_, ct.start, ct.len, y));
}

substr scaled_index::suffix_select(substr x, uint64_t k) const {
    if (x.empty() || x.hi > n())
        throw std::invalid_argument("scaled_index: bad query substring");
    if (k < 1 || k > x.size())
        throw std::out_of_range("scaled_index: suffix ordinal out of range");
    if (table_[x.size()] <= kNaiveCutoff)
        return naive_select(x, k);
    const scale* sc = nullptr;
    const covered_tree& ct = tree_for(x, sc);
    substr lx{x.lo - ct.start + 1, x.hi - ct.start + 1};
    substr got = ct.tree->suffix_select(lx, k);
    return {got.lo + ct.start - 1, x.hi};
}

std::vector<rle_run> scaled_index::bwt_rle(substr x) const {
    if (x.empty() || x.hi > n())
        throw std::invalid_argument("scaled_index: bad query substring");
    if (table_[x.size()] <= kNaiveCutoff)
        return naive_bwt(x);
    const scale* sc = nullptr;
    const covered_tree& ct = tree_for(x, sc);
    substr lx{x.lo - ct.start + 1, x.hi - ct.start + 1};
    // The transform only depends on the content of x, so the local answer is
    // the global one up to the alphabet renumbering.
    std::vector<rle_run> runs = ct.tree->bwt_rle(lx);
    for (rle_run& r : runs)
        r.chr = ct.inverse_renumber[r.chr];
    return runs;
}

uint64_t scaled_index::naive_rank(substr x, substr y) const {
    uint64_t cnt = 0;
    for (uint64_t k = x.lo; k <= x.hi; ++k)
        if (ti_->compare({k, x.hi}, y) < 0)
            ++cnt;
    return cnt;
}

substr scaled_index::naive_select(substr x, uint64_t k) const {
    std::vector<uint64_t> starts;
    for (uint64_t p = x.lo; p <= x.hi; ++p)
        starts.push_back(p);
    std::sort(starts.begin(), starts.end(), [&](uint64_t a, uint64_t b) {
        return ti_->compare({a, x.hi}, {b, x.hi}) < 0;
    });
    return {starts[k - 1], x.hi};
}

std::vector<rle_run> scaled_index::naive_bwt(substr x) const {
    // Order the suffixes of x$ (the sentinel alone first, then the suffixes
    // of x, whose order appending the sentinel does not change).
    std::vector<uint64_t> starts;
    for (uint64_t p = x.lo; p <= x.hi; ++p)
        starts.push_back(p);
    std::sort(starts.begin(), starts.end(), [&](uint64_t a, uint64_t b) {
        return ti_->compare({a, x.hi}, {b, x.hi}) < 0;
    });
    std::vector<rle_run> out;
    auto push = [&](uint32_t c) {
        if (!out.empty() && out.back().chr == c)
            out.back().len += 1;
        else
            out.push_back({c, 1});
    };
    push(ti_->at(x.hi)); // precedes the bare sentinel
    for (uint64_t p : starts)
        push(p == x.lo ? 0 : ti_->prev_char(p));
    return out;
}

} // namespace wavetk
