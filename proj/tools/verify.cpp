#include "commands.hpp"

#include "wavetk/periodic.hpp"
#include "wavetk/rank_select.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace wavetk::cli {

namespace {

// Context one suite runs in: deterministic rng, case counter, a fault switch
// (the test hook that flips one comparison), and the failure slot.
struct suite_ctx {
    std::mt19937_64 rng;
    uint64_t cases = 0;
    bool inject_fault = false;
    bool fault_pending = false;
    bool failed = false;
    std::string failure;

    // Applies the injected fault to exactly one comparison.
    bool tweak(bool ok) {
        if (fault_pending) {
            fault_pending = false;
            return !ok;
        }
        return ok;
    }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (failed)
            return;
        if (!tweak(ok)) {
            failed = true;
            failure = describe();
        }
    }
};

std::string show_values(const std::vector<int64_t>& a) {
    std::ostringstream ss;
    for (size_t i = 0; i < a.size(); ++i)
        ss << (i ? " " : "") << a[i];
    return ss.str();
}

std::string printable(const std::string& s) {
    return s;
}

// ---- plain oracles ------------------------------------------------------

uint64_t oracle_rank(const std::vector<int64_t>& a, uint64_t i, uint64_t j, int64_t x) {
    uint64_t c = 0;
    for (uint64_t k = i; k <= j; ++k)
        c += a[k - 1] < x;
    return c;
}

int64_t oracle_select(const std::vector<int64_t>& a, uint64_t i, uint64_t j, uint64_t k) {
    std::vector<int64_t> slice(a.begin() + i - 1, a.begin() + j);
    std::sort(slice.begin(), slice.end());
    return slice[k - 1];
}

std::optional<int64_t> oracle_successor(const std::vector<int64_t>& a, uint64_t i, uint64_t j,
                                        int64_t c) {
    std::optional<int64_t> best;
    for (uint64_t k = i; k <= j; ++k)
        if (a[k - 1] >= c && (!best || a[k - 1] < *best))
            best = a[k - 1];
    return best;
}

void naive_wavelet(const std::vector<uint64_t>& s, uint32_t height, uint32_t depth, uint64_t label,
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
    naive_wavelet(zeros, height, depth + 1, label << 1, out);
    naive_wavelet(ones, height, depth + 1, (label << 1) | 1, out);
}

std::string random_text(std::mt19937_64& rng, uint64_t n, uint32_t sigma) {
    std::string s(n, 'a');
    for (auto& c : s)
        c = char('a' + rng() % sigma);
    return s;
}

// ---- suites --------------------------------------------------------------

void suite_bitpack(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t n : sizes) {
        for (double density : {0.03, 0.5, 0.95}) {
            bit_vector b(n);
            std::vector<uint64_t> prefix(n + 1, 0);
            for (uint64_t i = 0; i < n; ++i) {
                bool bit = std::uniform_real_distribution<>(0, 1)(cx.rng) < density;
                b.set(i, bit);
                prefix[i + 1] = prefix[i] + bit;
            }
            rank_select rs(b);
            for (int round = 0; round < 400; ++round) {
                uint64_t i = cx.rng() % (n + 1);
                cx.check(rs.rank1(i) == prefix[i], [&] {
                    return "rank1(" + std::to_string(i) + ") on a bitvector of " +
                           std::to_string(n) + " bits, density " + std::to_string(density);
                });
            }
            for (uint64_t k = 1; k <= rs.ones(); k += 1 + rs.ones() / 200) {
                uint64_t pos = rs.select1(k);
                cx.check(prefix[pos] == k && b.get(pos - 1),
                         [&] { return "select1(" + std::to_string(k) + ")"; });
            }
        }
    }
}

void suite_partition(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t n : sizes) {
        uint32_t width = 1 + uint32_t(cx.rng() % 16);
        uint32_t t = uint32_t(cx.rng() % width);
        std::vector<uint64_t> vals(n);
        for (auto& v : vals)
            v = cx.rng() & ((uint64_t(1) << width) - 1);
        bit_partition p = partition_by_bit(packed_list::pack(vals, width), t);
        std::vector<uint64_t> zeros, ones;
        for (uint64_t v : vals)
            ((v >> (width - 1 - t)) & 1 ? ones : zeros).push_back(v);
        cx.check(p.zeros.unpack() == zeros && p.ones.unpack() == ones, [&] {
            return "partition width=" + std::to_string(width) + " t=" + std::to_string(t) +
                   " n=" + std::to_string(n);
        });
    }
}

void suite_wavelet_construction(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t n : sizes) {
        for (uint64_t sigma : {2, 16, 256}) {
            for (uint32_t tau : {1u, 2u, 0u}) {
                std::vector<uint64_t> s(n);
                for (auto& v : s)
                    v = cx.rng() % sigma;
                wavelet_build_options opts;
                if (tau)
                    opts.tau = tau;
                wavelet_tree wt = wavelet_tree::build(s, sigma, opts);
                std::map<std::pair<uint32_t, uint64_t>, std::string> expect;
                naive_wavelet(s, wt.height(), 0, 0, expect);
                bool ok = true;
                for (uint32_t d = 0; d < wt.height() && ok; ++d)
                    for (uint64_t label = 0; label < (uint64_t(1) << d) && ok; ++label) {
                        uint64_t node = wavelet_tree::heap_node(d, label);
                        std::string got;
                        for (uint64_t i = 0; i < wt.bitmasks().size(node); ++i)
                            got += wt.bitmasks().get(node, i) ? '1' : '0';
                        auto it = expect.find({d, label});
                        std::string want = it == expect.end() ? std::string() : it->second;
                        ok = got == want;
                    }
                cx.check(ok, [&] {
                    return "bitmask mismatch vs naive recursion, n=" + std::to_string(n) +
                           " sigma=" + std::to_string(sigma) + " tau=" + std::to_string(tau);
                });
                for (uint64_t i = 1; i <= std::min<uint64_t>(n, 200); ++i)
                    cx.check(wt.access(i) == s[i - 1],
                             [&] { return "access(" + std::to_string(i) + ")"; });
            }
        }
    }
}

void suite_range(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    // Exhaustive over short arrays plus sampled checks at the given sizes.
    for (int round = 0; round < 3; ++round) {
        std::vector<int64_t> a(24);
        for (auto& v : a)
            v = int64_t(cx.rng() % 12);
        range_index ri = range_index::build(a);
        for (uint64_t i = 1; i <= a.size(); ++i)
            for (uint64_t j = i; j <= a.size(); ++j) {
                for (int64_t x = -1; x <= 13; ++x)
                    cx.check(ri.range_rank(i, j, x) == oracle_rank(a, i, j, x), [&] {
                        return "range_rank(" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(x) + ") input=" + show_values(a);
                    });
                for (uint64_t k = 1; k <= j - i + 1; ++k)
                    cx.check(ri.range_select(i, j, k) == oracle_select(a, i, j, k), [&] {
                        return "range_select(" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ") input=" + show_values(a);
                    });
                for (int64_t c = -1; c <= 13; ++c)
                    cx.check(ri.range_successor(i, j, c) == oracle_successor(a, i, j, c), [&] {
                        return "range_successor(" + std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(c) + ") input=" + show_values(a);
                    });
            }
    }
    for (uint64_t n : sizes) {
        std::vector<int64_t> a(n);
        for (auto& v : a)
            v = int64_t(cx.rng() % (2 * n)) - int64_t(n);
        range_index ri = range_index::build(a);
        for (int round = 0; round < 600; ++round) {
            uint64_t i = 1 + cx.rng() % n;
            uint64_t j = i + cx.rng() % (n - i + 1);
            int64_t x = int64_t(cx.rng() % (2 * n)) - int64_t(n);
            cx.check(ri.range_rank(i, j, x) == oracle_rank(a, i, j, x),
                     [&] { return "sampled range_rank, n=" + std::to_string(n); });
            uint64_t k = 1 + cx.rng() % (j - i + 1);
            cx.check(ri.range_select(i, j, k) == oracle_select(a, i, j, k),
                     [&] { return "sampled range_select, n=" + std::to_string(n); });
            cx.check(ri.range_successor(i, j, x) == oracle_successor(a, i, j, x),
                     [&] { return "sampled range_successor, n=" + std::to_string(n); });
        }
    }
}

void suite_batch(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t n : sizes) {
        std::vector<int64_t> a(n);
        for (auto& v : a)
            v = int64_t(cx.rng() % n);
        range_index ri = range_index::build(a);
        std::vector<successor_query> qs(n);
        for (auto& q : qs) {
            q.i = 1 + cx.rng() % n;
            q.j = q.i + cx.rng() % (n - q.i + 1);
            q.c = int64_t(cx.rng() % (n + 2)) - 1;
        }
        for (uint32_t tau : {1u, 0u}) {
            batch_options opts;
            if (tau)
                opts.tau = tau;
            auto batch = range_successor_batch(a, qs, opts);
            for (size_t qi = 0; qi < qs.size(); ++qi)
                cx.check(batch[qi] == ri.range_successor(qs[qi].i, qs[qi].j, qs[qi].c), [&] {
                    return "batch successor query " + std::to_string(qi) + " (i=" +
                           std::to_string(qs[qi].i) + " j=" + std::to_string(qs[qi].j) +
                           " c=" + std::to_string(qs[qi].c) + ") input=" + show_values(a);
                });
        }
    }
}

void suite_lcp(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t n : sizes) {
        std::string w = random_text(cx.rng, n, 3);
        text_index ti = text_index::from_bytes(w);
        std::string ws = w + char(0); // sentinel proxy for scan comparisons
        auto scan_str = [&](substr h) {
            std::string s;
            for (uint64_t p = h.lo; p <= h.hi && !h.empty(); ++p)
                s += p == n + 1 ? char(0) : w[p - 1];
            return s;
        };
        for (int round = 0; round < 800; ++round) {
            uint64_t a = 1 + cx.rng() % (n + 1);
            uint64_t b = a + cx.rng() % (n + 2 - a);
            uint64_t c = 1 + cx.rng() % (n + 1);
            uint64_t d = c + cx.rng() % (n + 2 - c);
            substr x{a, b}, y{c, d};
            std::string sx = scan_str(x), sy = scan_str(y);
            uint64_t q = 0;
            while (q < sx.size() && q < sy.size() && sx[q] == sy[q])
                ++q;
            cx.check(ti.lcp(x, y) == q, [&] {
                return "lcp mismatch, w=" + printable(w) + " x=[" + std::to_string(a) + "," +
                       std::to_string(b) + "] y=[" + std::to_string(c) + "," + std::to_string(d) +
                       "]";
            });
            int expect = sx == sy ? 0 : (sx < sy ? -1 : 1);
            cx.check(ti.compare(x, y) == expect, [&] { return "compare mismatch, w=" + w; });
            uint64_t ell = 1 + cx.rng() % (n + 2);
            int expect_t = sx.substr(0, ell) == sy.substr(0, ell)
                               ? 0
                               : (sx.substr(0, ell) < sy.substr(0, ell) ? -1 : 1);
            cx.check(ti.compare_trimmed(x, y, ell) == expect_t,
                     [&] { return "compare_trimmed mismatch, w=" + w; });
            if (!sy.empty() && y.hi <= n && !sx.empty()) {
                std::string power;
                while (power.size() < sx.size() + sy.size())
                    power += sy;
                uint64_t qp = 0;
                while (qp < sx.size() && sx[qp] == power[qp])
                    ++qp;
                bool less = sx < power;
                auto got = ti.lcp_with_power(x, y);
                cx.check(got.lcp == qp && got.less == less,
                         [&] { return "lcp_with_power mismatch, w=" + w; });
            }
        }
    }
}

void suite_occurrences(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t n : sizes) {
        std::string w = random_text(cx.rng, n, 2);
        text_index ti = text_index::from_bytes(w);
        for (int round = 0; round < 500; ++round) {
            uint64_t yl = 1 + cx.rng() % std::min<uint64_t>(n, 12);
            uint64_t yo = 1 + cx.rng() % (n - yl + 1);
            uint64_t span = yl + cx.rng() % (2 * yl + 2);
            uint64_t xo = 1 + cx.rng() % n;
            uint64_t xh = std::min(n, xo + span);
            if (xh - xo + 1 >= 3 * (yl + 1))
                xh = xo + 3 * (yl + 1) - 2;
            substr x{xo, xh}, y{yo, yo + yl - 1};
            auto progs = occurrences(ti, x, y);
            std::vector<uint64_t> got;
            for (const progression& p : progs)
                for (uint64_t i = 0; i < p.count; ++i)
                    got.push_back(p.term(i));
            std::vector<uint64_t> expect;
            for (uint64_t k = xo; k + yl - 1 <= xh; ++k)
                if (w.compare(k - 1, yl, w, yo - 1, yl) == 0)
                    expect.push_back(k);
            bool sorted = std::is_sorted(got.begin(), got.end());
            uint64_t bound = (x.size() + 1 + y.size()) / (y.size() + 1);
            cx.check(got == expect && sorted && progs.size() <= bound, [&] {
                return "occurrences mismatch, w=" + w + " x=[" + std::to_string(xo) + "," +
                       std::to_string(xh) + "] y=[" + std::to_string(yo) + "," +
                       std::to_string(yo + yl - 1) + "]";
            });
        }
    }
}

void suite_filter(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t n : sizes) {
        std::string w = random_text(cx.rng, n, 2);
        text_index ti = text_index::from_bytes(w);
        for (int round = 0; round < 600; ++round) {
            // Build a genuine progression from occurrences of a short pattern.
            uint64_t yl = 1 + cx.rng() % 6;
            uint64_t yo = 1 + cx.rng() % (n - yl + 1);
            substr y{yo, yo + yl - 1};
            uint64_t xo = 1 + cx.rng() % n;
            uint64_t xh = std::min(n, xo + 3 * (yl + 1) - 2);
            auto progs = occurrences(ti, {xo, xh}, y);
            if (progs.empty())
                continue;
            progression p = progs[cx.rng() % progs.size()];
            uint64_t j = std::min<uint64_t>(n + 1, p.back() + cx.rng() % (n + 2 - p.back()));

            uint64_t al = 1 + cx.rng() % (n + 1);
            uint64_t ah = al + cx.rng() % (n + 2 - al);
            uint64_t bl = 1 + cx.rng() % (n + 1);
            uint64_t bh = bl + cx.rng() % (n + 2 - bl);
            string_interval iv{{al, ah}, {bl, bh}, 1 + cx.rng() % (n + 1),
                               bool(cx.rng() & 1), bool(cx.rng() & 1)};
            filter_result got = filter_progression(ti, p, j, iv);
            std::vector<uint64_t> expect;
            for (uint64_t i = 0; i < p.count; ++i)
                if (interval_contains(ti, iv, {p.term(i), j}))
                    expect.push_back(p.term(i));
            std::vector<uint64_t> have;
            for (uint64_t i = 0; i < got.kept.count; ++i)
                have.push_back(got.kept.term(i));
            cx.check(have == expect, [&] {
                return "filter_progression mismatch, w=" + w + " p=(" + std::to_string(p.start) +
                       "," + std::to_string(p.diff) + "," + std::to_string(p.count) + ") j=" +
                       std::to_string(j) + " trim=" + std::to_string(iv.trim);
            });
        }
    }
}

void suite_wst(suite_ctx& cx, const std::vector<uint64_t>&) {
    for (int round = 0; round < 12; ++round) {
        uint64_t n = 2 + cx.rng() % 9;
        std::string w = random_text(cx.rng, n, 2);
        text_index ti = text_index::from_bytes(w);
        wavelet_suffix_tree wst(ti);
        for (uint64_t i = 1; i <= n; ++i)
            for (uint64_t j = i; j <= n; ++j) {
                substr x{i, j};
                std::vector<uint64_t> starts;
                for (uint64_t p = i; p <= j; ++p)
                    starts.push_back(p);
                std::sort(starts.begin(), starts.end(), [&](uint64_t a, uint64_t b) {
                    return w.substr(a - 1, j - a + 1) < w.substr(b - 1, j - b + 1);
                });
                for (uint64_t k = 1; k <= x.size(); ++k) {
                    substr got = wst.suffix_select(x, k);
                    cx.check(got.lo == starts[k - 1], [&] {
                        return "suffix_select(w=" + w + ", x=[" + std::to_string(i) + "," +
                               std::to_string(j) + "], k=" + std::to_string(k) + ")";
                    });
                    cx.check(wst.suffix_rank(x, got) == k - 1, [&] {
                        return "rank/select duality, w=" + w + " x=[" + std::to_string(i) + "," +
                               std::to_string(j) + "] k=" + std::to_string(k);
                    });
                }
                for (uint64_t c = 1; c <= n; ++c)
                    for (uint64_t d2 = c; d2 <= n; ++d2) {
                        std::string ystr = w.substr(c - 1, d2 - c + 1);
                        uint64_t expect = 0;
                        for (uint64_t p : starts)
                            expect += w.substr(p - 1, j - p + 1) < ystr;
                        cx.check(wst.suffix_rank(x, {c, d2}) == expect, [&] {
                            return "suffix_rank(w=" + w + ", x=[" + std::to_string(i) + "," +
                                   std::to_string(j) + "], y=[" + std::to_string(c) + "," +
                                   std::to_string(d2) + "])";
                        });
                    }
            }
    }
}

void suite_bwt(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t size : sizes) {
        uint64_t n = std::min<uint64_t>(size, 400);
        if (n < 2)
            continue;
        std::string w = random_text(cx.rng, n, 4);
        text_index ti = text_index::from_bytes(w);
        wavelet_suffix_tree wst(ti);
        for (int round = 0; round < 120; ++round) {
            uint64_t i = 1 + cx.rng() % n;
            uint64_t j = i + cx.rng() % (n - i + 1);
            auto got = wst.bwt_rle({i, j});
            // Direct transform: sort the suffixes of x$ and read the
            // preceding characters.
            std::vector<uint64_t> starts;
            for (uint64_t p = i; p <= j; ++p)
                starts.push_back(p);
            std::sort(starts.begin(), starts.end(), [&](uint64_t a, uint64_t b) {
                return w.substr(a - 1, j - a + 1) < w.substr(b - 1, j - b + 1);
            });
            std::vector<rle_run> expect;
            auto push = [&](uint32_t c) {
                if (!expect.empty() && expect.back().chr == c)
                    ++expect.back().len;
                else
                    expect.push_back({c, 1});
            };
            push(uint32_t(uint8_t(w[j - 1])) + 1);
            for (uint64_t p : starts)
                push(p == i ? 0 : uint32_t(uint8_t(w[p - 2])) + 1);
            cx.check(got == expect, [&] {
                return "bwt_rle(w=" + w + ", x=[" + std::to_string(i) + "," + std::to_string(j) +
                       "])";
            });
        }
    }
}

void suite_scaled(suite_ctx& cx, const std::vector<uint64_t>& sizes) {
    for (uint64_t size : sizes) {
        uint64_t n = std::max<uint64_t>(std::min<uint64_t>(size, 1200), 80);
        std::string w = random_text(cx.rng, n, 3);
        text_index ti = text_index::from_bytes(w);
        wavelet_suffix_tree full(ti);
        scaled_index scaled(ti);
        for (uint64_t m = 1; m <= n; ++m) {
            uint64_t s = scaled.scale_for_length(m);
            cx.check(s >= std::min(2 * m, n) && s <= 2 * (m + 1) * (m + 1),
                     [&] { return "scale table bound violated at m=" + std::to_string(m); });
        }
        for (int round = 0; round < 150; ++round) {
            uint64_t i = 1 + cx.rng() % n;
            uint64_t j = i + cx.rng() % (n - i + 1);
            substr x{i, j};
            uint64_t c = 1 + cx.rng() % n;
            uint64_t d = c + cx.rng() % (n - c + 1);
            cx.check(scaled.suffix_rank(x, {c, d}) == full.suffix_rank(x, {c, d}),
                     [&] { return "scaled suffix_rank mismatch, w=" + w; });
            uint64_t k = 1 + cx.rng() % x.size();
            cx.check(scaled.suffix_select(x, k) == full.suffix_select(x, k),
                     [&] { return "scaled suffix_select mismatch, w=" + w; });
            cx.check(scaled.bwt_rle(x) == full.bwt_rle(x),
                     [&] { return "scaled bwt mismatch, w=" + w; });
        }
    }
}

void suite_serialization(suite_ctx& cx, const std::vector<uint64_t>&) {
    // Every structure kind through a save/load round trip.
    uint64_t n = 300;
    {
        std::vector<uint64_t> s(n);
        for (auto& v : s)
            v = cx.rng() % 64;
        index_file idx;
        idx.kind = index_kind::wavelet;
        idx.wavelet = std::make_unique<wavelet_tree>(wavelet_tree::build(s, 64));
        std::stringstream buf;
        save_index(idx, buf);
        index_file back = load_index(buf);
        for (uint64_t i = 1; i <= n; ++i)
            cx.check(back.wavelet->access(i) == s[i - 1],
                     [&] { return "wavelet round trip access mismatch"; });
    }
    {
        std::vector<int64_t> a(n);
        for (auto& v : a)
            v = int64_t(cx.rng() % 100) - 50;
        index_file idx;
        idx.kind = index_kind::range;
        idx.range = std::make_unique<range_index>(range_index::build(a));
        std::stringstream buf;
        save_index(idx, buf);
        index_file back = load_index(buf);
        for (int round = 0; round < 300; ++round) {
            uint64_t i = 1 + cx.rng() % n;
            uint64_t j = i + cx.rng() % (n - i + 1);
            int64_t x = int64_t(cx.rng() % 100) - 50;
            cx.check(back.range->range_rank(i, j, x) == idx.range->range_rank(i, j, x),
                     [&] { return "range round trip rank mismatch"; });
            cx.check(back.range->range_successor(i, j, x) == idx.range->range_successor(i, j, x),
                     [&] { return "range round trip successor mismatch"; });
        }
    }
    for (index_kind kind : {index_kind::wst, index_kind::scaled}) {
        std::string w = random_text(cx.rng, 180, 3);
        index_file idx;
        idx.kind = kind;
        idx.text = parse_text_input(w);
        idx.ti = std::make_unique<text_index>(idx.text);
        if (kind == index_kind::wst)
            idx.wst = std::make_unique<wavelet_suffix_tree>(*idx.ti);
        else
            idx.scaled = std::make_unique<scaled_index>(*idx.ti);
        std::stringstream buf;
        save_index(idx, buf);
        index_file back = load_index(buf);
        for (int round = 0; round < 200; ++round) {
            uint64_t i = 1 + cx.rng() % w.size();
            uint64_t j = i + cx.rng() % (w.size() - i + 1);
            substr x{i, j};
            uint64_t k = 1 + cx.rng() % x.size();
            if (kind == index_kind::wst) {
                cx.check(back.wst->suffix_select(x, k) == idx.wst->suffix_select(x, k),
                         [&] { return "wst round trip select mismatch"; });
                cx.check(back.wst->bwt_rle(x) == idx.wst->bwt_rle(x),
                         [&] { return "wst round trip bwt mismatch"; });
            } else {
                cx.check(back.scaled->suffix_select(x, k) == idx.scaled->suffix_select(x, k),
                         [&] { return "scaled round trip select mismatch"; });
            }
        }
    }
}

struct suite_def {
    const char* name;
    void (*fn)(suite_ctx&, const std::vector<uint64_t>&);
};

constexpr suite_def kSuites[] = {
    {"bitpack-rank-select", suite_bitpack},
    {"bitpack-partition", suite_partition},
    {"wavelet-construction", suite_wavelet_construction},
    {"range-queries", suite_range},
    {"range-batch", suite_batch},
    {"string-lcp", suite_lcp},
    {"string-occurrences", suite_occurrences},
    {"progression-filter", suite_filter},
    {"wst-rank-select", suite_wst},
    {"wst-bwt", suite_bwt},
    {"scaled-index", suite_scaled},
    {"serialization", suite_serialization},
};

} // namespace

int cmd_verify(const verify_args& args, std::ostream& out, std::ostream& err) {
    bool any_failed = false;
    for (const suite_def& suite : kSuites) {
        suite_ctx cx;
        cx.rng.seed(args.seed * 0x9e3779b97f4a7c15ULL + std::hash<std::string>{}(suite.name));
        cx.inject_fault = args.inject_fault == suite.name;
        cx.fault_pending = cx.inject_fault;
        for (uint32_t t = 0; t < args.trials && !cx.failed; ++t)
            suite.fn(cx, args.sizes);
        if (cx.failed) {
            any_failed = true;
            out << "suite=" << suite.name << " cases=" << cx.cases << " status=FAIL\n";
            err << "verify: suite '" << suite.name << "' failed\n";
            err << "reproducer: seed=" << args.seed << " " << cx.failure << "\n";
        } else {
            out << "suite=" << suite.name << " cases=" << cx.cases << " status=ok\n";
        }
    }
    return any_failed ? exit_verify : exit_ok;
}

} // namespace wavetk::cli
