#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace wavetk::cli {

namespace {

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

uint64_t now_ns() {
    return uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now().time_since_epoch())
                        .count());
}

} // namespace

std::vector<uint32_t> parse_text_input(const std::string& bytes) {
    std::vector<uint32_t> out(bytes.size());
    for (size_t i = 0; i < bytes.size(); ++i)
        out[i] = uint8_t(bytes[i]);
    return out;
}

std::optional<std::vector<int64_t>> parse_dec_input(const std::string& bytes) {
    std::vector<int64_t> out;
    const char* p = bytes.data();
    const char* end = p + bytes.size();
    while (p < end) {
        while (p < end && std::isspace(uint8_t(*p)))
            ++p;
        if (p == end)
            break;
        int64_t v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc{})
            return std::nullopt;
        out.push_back(v);
        p = next;
    }
    return out;
}

std::vector<int64_t> parse_bin_input(const std::string& bytes) {
    std::vector<int64_t> out(bytes.size() / 8);
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t v = 0;
        for (size_t b = 0; b < 8; ++b)
            v |= uint64_t(uint8_t(bytes[i * 8 + b])) << (8 * b);
        out[i] = int64_t(v);
    }
    return out;
}

int cmd_build(const build_args& args, std::ostream& out, std::ostream& err) {
    auto raw = slurp(args.input_path);
    if (!raw) {
        err << "build: cannot read input file '" << args.input_path << "'\n";
        return exit_data;
    }

    input_format fmt;
    if (args.format == "text")
        fmt = input_format::text;
    else if (args.format == "dec")
        fmt = input_format::dec;
    else if (args.format == "bin")
        fmt = input_format::bin;
    else {
        err << "build: unknown input format '" << args.format << "'\n";
        return exit_usage;
    }

    index_file idx;
    idx.format = fmt;
    uint64_t started = now_ns();
    uint64_t n = 0, sigma = 0;
    try {
        if (args.kind == "wavelet" || args.kind == "range") {
            std::vector<int64_t> values;
            if (fmt == input_format::text) {
                for (uint32_t c : parse_text_input(*raw))
                    values.push_back(c);
            } else if (fmt == input_format::dec) {
                auto parsed = parse_dec_input(*raw);
                if (!parsed) {
                    err << "build: malformed integer input\n";
                    return exit_data;
                }
                values = std::move(*parsed);
            } else {
                values = parse_bin_input(*raw);
            }
            n = values.size();
            if (args.kind == "wavelet") {
                uint64_t maxv = 0;
                for (int64_t v : values) {
                    if (v < 0) {
                        err << "build: wavelet input must be non-negative\n";
                        return exit_data;
                    }
                    maxv = std::max(maxv, uint64_t(v));
                }
                sigma = values.empty() ? 1 : maxv + 1;
                std::vector<uint64_t> symbols(values.begin(), values.end());
                wavelet_build_options opts;
                opts.tau = args.tau;
                idx.kind = index_kind::wavelet;
                idx.wavelet = std::make_unique<wavelet_tree>(
                    wavelet_tree::build(symbols, sigma, opts));
            } else {
                range_build_options opts;
                opts.degree = args.degree;
                opts.tau = args.tau;
                idx.kind = index_kind::range;
                idx.range = std::make_unique<range_index>(range_index::build(values, opts));
                sigma = idx.range->distinct_values().size();
            }
        } else if (args.kind == "wst" || args.kind == "scaled") {
            std::vector<uint32_t> text;
            if (fmt == input_format::text) {
                text = parse_text_input(*raw);
            } else if (fmt == input_format::dec) {
                auto parsed = parse_dec_input(*raw);
                if (!parsed) {
                    err << "build: malformed integer input\n";
                    return exit_data;
                }
                for (int64_t v : *parsed) {
                    // Character values drive bucket arrays; keep them sane.
                    if (v < 0 || v >= (1 << 24)) {
                        err << "build: text characters must lie in [0, 2^24)\n";
                        return exit_data;
                    }
                    text.push_back(uint32_t(v));
                }
            } else {
                for (int64_t v : parse_bin_input(*raw)) {
                    if (v < 0 || v >= (1 << 24)) {
                        err << "build: text characters must lie in [0, 2^24)\n";
                        return exit_data;
                    }
                    text.push_back(uint32_t(v));
                }
            }
            n = text.size();
            idx.text = std::move(text);
            idx.ti = std::make_unique<text_index>(idx.text);
            sigma = idx.ti->sigma() - 1;
            if (args.kind == "wst") {
                idx.kind = index_kind::wst;
                idx.wst = std::make_unique<wavelet_suffix_tree>(*idx.ti);
            } else {
                idx.kind = index_kind::scaled;
                idx.scaled = std::make_unique<scaled_index>(*idx.ti);
            }
        } else {
            err << "build: unknown kind '" << args.kind << "'\n";
            return exit_usage;
        }

        std::ofstream fout(args.output_path, std::ios::binary);
        if (!fout) {
            err << "build: cannot write output file '" << args.output_path << "'\n";
            return exit_data;
        }
        save_index(idx, fout);
        fout.flush();
        uint64_t bytes = uint64_t(fout.tellp());
        uint64_t wall = now_ns() - started;
        out << "n=" << n << "\n";
        out << "sigma=" << sigma << "\n";
        out << "bytes=" << bytes << "\n";
        out << "wall_ms=" << wall / 1000000 << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        err << "build: " << e.what() << "\n";
        return exit_data;
    }
}

namespace {

struct query_record {
    enum class kind { access, rank, select, successor, ss_rank, ss_select, bwt_rle } k;
    int64_t arg[4] = {0, 0, 0, 0};
};

std::optional<query_record> parse_query_line(const std::string& line, const index_file& idx,
                                             std::string& why) {
    std::istringstream ss(line);
    std::string op;
    ss >> op;
    query_record q;
    size_t arity = 0;
    bool needs_array = false, needs_tree = false;
    if (op == "access") {
        q.k = query_record::kind::access;
        arity = 1;
    } else if (op == "rank") {
        q.k = query_record::kind::rank;
        arity = 3;
        needs_array = true;
    } else if (op == "select") {
        q.k = query_record::kind::select;
        arity = 3;
        needs_array = true;
    } else if (op == "successor") {
        q.k = query_record::kind::successor;
        arity = 3;
        needs_array = true;
    } else if (op == "ss_rank") {
        q.k = query_record::kind::ss_rank;
        arity = 4;
        needs_tree = true;
    } else if (op == "ss_select") {
        q.k = query_record::kind::ss_select;
        arity = 3;
        needs_tree = true;
    } else if (op == "bwt_rle") {
        q.k = query_record::kind::bwt_rle;
        arity = 2;
        needs_tree = true;
    } else {
        why = "unknown query kind '" + op + "'";
        return std::nullopt;
    }
    for (size_t i = 0; i < arity; ++i) {
        if (!(ss >> q.arg[i])) {
            why = "expected " + std::to_string(arity) + " integer arguments";
            return std::nullopt;
        }
    }
    std::string extra;
    if (ss >> extra) {
        why = "trailing token '" + extra + "'";
        return std::nullopt;
    }
    if (q.k == query_record::kind::access && idx.kind != index_kind::wavelet) {
        why = "access queries need a wavelet index";
        return std::nullopt;
    }
    if (needs_array && idx.kind != index_kind::range) {
        why = "range queries need a range index";
        return std::nullopt;
    }
    if (needs_tree && idx.kind != index_kind::wst && idx.kind != index_kind::scaled) {
        why = "substring queries need a wst or scaled index";
        return std::nullopt;
    }
    return q;
}

std::string format_char(uint32_t shifted, input_format fmt) {
    if (shifted == 0)
        return "$";
    if (fmt == input_format::text)
        return std::string(1, char(uint8_t(shifted - 1)));
    return std::to_string(shifted - 1);
}

std::string run_query(const index_file& idx, const query_record& q) {
    switch (q.k) {
    case query_record::kind::access:
        return std::to_string(idx.wavelet->access(uint64_t(q.arg[0])));
    case query_record::kind::rank:
        return std::to_string(
            idx.range->range_rank(uint64_t(q.arg[0]), uint64_t(q.arg[1]), q.arg[2]));
    case query_record::kind::select:
        return std::to_string(
            idx.range->range_select(uint64_t(q.arg[0]), uint64_t(q.arg[1]), uint64_t(q.arg[2])));
    case query_record::kind::successor: {
        auto got = idx.range->range_successor(uint64_t(q.arg[0]), uint64_t(q.arg[1]), q.arg[2]);
        return got ? std::to_string(*got) : std::string("none");
    }
    case query_record::kind::ss_rank: {
        substr x{uint64_t(q.arg[0]), uint64_t(q.arg[1])};
        substr y{uint64_t(q.arg[2]), uint64_t(q.arg[3])};
        uint64_t r = idx.kind == index_kind::wst ? idx.wst->suffix_rank(x, y)
                                                 : idx.scaled->suffix_rank(x, y);
        return std::to_string(r);
    }
    case query_record::kind::ss_select: {
        substr x{uint64_t(q.arg[0]), uint64_t(q.arg[1])};
        substr got = idx.kind == index_kind::wst ? idx.wst->suffix_select(x, uint64_t(q.arg[2]))
                                                 : idx.scaled->suffix_select(x, uint64_t(q.arg[2]));
        return std::to_string(got.lo);
    }
    case query_record::kind::bwt_rle: {
        substr x{uint64_t(q.arg[0]), uint64_t(q.arg[1])};
        std::vector<rle_run> runs =
            idx.kind == index_kind::wst ? idx.wst->bwt_rle(x) : idx.scaled->bwt_rle(x);
        std::string out;
        for (size_t i = 0; i < runs.size(); ++i) {
            if (i)
                out += ' ';
            out += format_char(runs[i].chr, idx.format) + ":" + std::to_string(runs[i].len);
        }
        return out;
    }
    }
    return "";
}

} // namespace

int cmd_query(const query_args& args, std::ostream& out, std::ostream& err) {
    std::ifstream fin(args.index_path, std::ios::binary);
    if (!fin) {
        err << "query: cannot read index '" << args.index_path << "'\n";
        return exit_data;
    }
    index_file idx;
    try {
        idx = load_index(fin);
    } catch (const std::exception& e) {
        err << "query: " << e.what() << "\n";
        return exit_data;
    }

    auto raw = slurp(args.queries_path);
    if (!raw) {
        err << "query: cannot read queries file '" << args.queries_path << "'\n";
        return exit_data;
    }

    // Parse everything up front so a malformed line never interrupts output
    // mid-stream.
    std::vector<query_record> records;
    std::vector<uint64_t> line_of;
    std::istringstream lines(*raw);
    std::string line;
    uint64_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::string why;
        auto q = parse_query_line(line, idx, why);
        if (!q) {
            err << "query: line " << lineno << ": " << why << "\n";
            return exit_data;
        }
        records.push_back(*q);
        line_of.push_back(lineno);
    }

    std::vector<std::string> answers(records.size());
    std::vector<std::string> errors(records.size());
    auto worker = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            try {
                answers[i] = run_query(idx, records[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (args.threads <= 1 || records.size() < 2) {
        worker(0, records.size());
    } else {
        uint32_t nt = std::min<uint32_t>(args.threads, uint32_t(records.size()));
        std::vector<std::thread> pool;
        size_t chunk = (records.size() + nt - 1) / nt;
        for (uint32_t t = 0; t < nt; ++t) {
            size_t lo = t * chunk;
            size_t hi = std::min(records.size(), lo + chunk);
            if (lo < hi)
                pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }
    for (size_t i = 0; i < records.size(); ++i) {
        if (!errors[i].empty()) {
            err << "query: line " << line_of[i] << ": " << errors[i] << "\n";
            return exit_data;
        }
    }
    for (const std::string& a : answers)
        out << a << "\n";
    return exit_ok;
}

int cmd_bench(const bench_args& args, std::ostream& out, std::ostream& err) {
    out << "kind\tn\tq\tbuild_ns\tquery_ns_total\tquery_ns_p50\n";
    std::mt19937_64 rng(args.seed);

    auto p50 = [](std::vector<uint64_t>& times) -> uint64_t {
        if (times.empty())
            return 0;
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        return times[times.size() / 2];
    };

    for (uint64_t n : args.n_list) {
        if (n == 0)
            continue;
        for (uint64_t q : args.q_list) {
            if (args.kind == "wavelet") {
                std::vector<uint64_t> s(n);
                for (auto& v : s)
                    v = rng() % 256;
                uint64_t t0 = now_ns();
                wavelet_tree wt = wavelet_tree::build(s, 256);
                uint64_t build = now_ns() - t0;
                std::vector<uint64_t> times(q);
                uint64_t total = 0;
                uint64_t sink = 0;
                for (uint64_t i = 0; i < q; ++i) {
                    uint64_t pos = 1 + rng() % n;
                    uint64_t a = now_ns();
                    sink += wt.access(pos);
                    times[i] = now_ns() - a;
                    total += times[i];
                }
                (void)sink;
                out << "wavelet\t" << n << "\t" << q << "\t" << build << "\t" << total << "\t"
                    << p50(times) << "\n";
            } else if (args.kind == "range") {
                std::vector<int64_t> a(n);
                for (auto& v : a)
                    v = int64_t(rng() % n);
                uint64_t t0 = now_ns();
                range_index ri = range_index::build(a);
                uint64_t build = now_ns() - t0;
                std::vector<uint64_t> times(q);
                uint64_t total = 0;
                int64_t sink = 0;
                for (uint64_t i = 0; i < q; ++i) {
                    uint64_t lo = 1 + rng() % n;
                    uint64_t hi = lo + rng() % (n - lo + 1);
                    uint64_t t1 = now_ns();
                    switch (i % 3) {
                    case 0: sink += int64_t(ri.range_rank(lo, hi, int64_t(rng() % n))); break;
                    case 1: sink += ri.range_select(lo, hi, 1 + rng() % (hi - lo + 1)); break;
                    default: {
                        auto got = ri.range_successor(lo, hi, int64_t(rng() % n));
                        sink += got ? *got : 0;
                    }
                    }
                    times[i] = now_ns() - t1;
                    total += times[i];
                }
                (void)sink;
                out << "range\t" << n << "\t" << q << "\t" << build << "\t" << total << "\t"
                    << p50(times) << "\n";
            } else if (args.kind == "successor") {
                std::vector<int64_t> a(n);
                for (auto& v : a)
                    v = int64_t(rng() % n);
                std::vector<successor_query> qs(q);
                for (auto& query : qs) {
                    query.i = 1 + rng() % n;
                    query.j = query.i + rng() % (n - query.i + 1);
                    query.c = int64_t(rng() % n);
                }
                uint64_t t0 = now_ns();
                range_index ri = range_index::build(a);
                uint64_t online_build = now_ns() - t0;
                std::vector<std::optional<int64_t>> online(qs.size());
                std::vector<uint64_t> times(q);
                uint64_t total = 0;
                for (uint64_t i = 0; i < q; ++i) {
                    uint64_t t1 = now_ns();
                    online[i] = ri.range_successor(qs[i].i, qs[i].j, qs[i].c);
                    times[i] = now_ns() - t1;
                    total += times[i];
                }
                out << "successor_online\t" << n << "\t" << q << "\t" << online_build << "\t"
                    << total << "\t" << p50(times) << "\n";

                uint64_t t2 = now_ns();
                std::vector<std::optional<int64_t>> offline = range_successor_batch(a, qs);
                uint64_t batch_total = now_ns() - t2;
                out << "successor_offline\t" << n << "\t" << q << "\t0\t" << batch_total
                    << "\t0\n";
                for (uint64_t i = 0; i < q; i += std::max<uint64_t>(1, q / 997)) {
                    if (online[i] != offline[i]) {
                        err << "bench: offline successor mismatch at query " << i << "\n";
                        return exit_verify;
                    }
                }
            } else if (args.kind == "wst") {
                std::vector<uint32_t> text(n);
                for (auto& c : text)
                    c = uint32_t(rng() % 4);
                uint64_t t0 = now_ns();
                text_index ti(text);
                wavelet_suffix_tree wst(ti);
                uint64_t build = now_ns() - t0;
                std::vector<uint64_t> times(q);
                uint64_t total = 0;
                uint64_t sink = 0;
                for (uint64_t i = 0; i < q; ++i) {
                    uint64_t lo = 1 + rng() % n;
                    uint64_t hi = lo + rng() % (n - lo + 1);
                    substr x{lo, hi};
                    if (i % 3 == 2) {
                        // The transform costs run-count * log n, and random
                        // text keeps almost every run at length one; short
                        // windows keep the measurement about the structure.
                        hi = lo + rng() % std::min<uint64_t>(n - lo + 1, 128);
                        x = {lo, hi};
                    }
                    uint64_t t1 = now_ns();
                    switch (i % 3) {
                    case 0: sink += wst.suffix_rank(x, substr{1, 1 + rng() % n}); break;
                    case 1: sink += wst.suffix_select(x, 1 + rng() % x.size()).lo; break;
                    default: sink += wst.bwt_rle(x).size();
                    }
                    times[i] = now_ns() - t1;
                    total += times[i];
                }
                (void)sink;
                out << "wst\t" << n << "\t" << q << "\t" << build << "\t" << total << "\t"
                    << p50(times) << "\n";
            } else {
                err << "bench: unknown kind '" << args.kind << "'\n";
                return exit_usage;
            }
        }
    }
    return exit_ok;
}

} // namespace wavetk::cli
