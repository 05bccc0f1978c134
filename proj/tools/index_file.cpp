#include "index_file.hpp"

#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace wavetk::cli {

namespace {

constexpr char kMagic[8] = {'W', 'V', 'T', 'K', 'I', 'D', 'X', '1'};
constexpr uint32_t kVersion = 1;

void put_bytes(std::ostream& out, const void* p, size_t n) {
    out.write(static_cast<const char*>(p), std::streamsize(n));
}

template <typename T> void put(std::ostream& out, T v) {
    static_assert(std::is_integral_v<T>);
    unsigned char b[sizeof(T)];
    for (size_t i = 0; i < sizeof(T); ++i)
        b[i] = (unsigned char)((std::make_unsigned_t<T>(v) >> (8 * i)) & 0xff);
    put_bytes(out, b, sizeof(T));
}

template <typename T> T get(std::istream& in) {
    unsigned char b[sizeof(T)];
    in.read(reinterpret_cast<char*>(b), sizeof(T));
    if (!in)
        throw std::runtime_error("index file: truncated payload");
    std::make_unsigned_t<T> v = 0;
    for (size_t i = 0; i < sizeof(T); ++i)
        v |= std::make_unsigned_t<T>(b[i]) << (8 * i);
    return T(v);
}

void put_words(std::ostream& out, const std::vector<uint64_t>& w) {
    put<uint64_t>(out, w.size());
    for (uint64_t x : w)
        put<uint64_t>(out, x);
}

std::vector<uint64_t> get_words(std::istream& in) {
    auto n = get<uint64_t>(in);
    std::vector<uint64_t> w(n);
    for (auto& x : w)
        x = get<uint64_t>(in);
    return w;
}

void put_bitmask(std::ostream& out, const node_bits& nb, uint64_t node) {
    if (!nb.has_node(node)) {
        put<uint64_t>(out, 0);
        return;
    }
    bit_vector b = nb.extract(node);
    put<uint64_t>(out, b.size());
    for (uint64_t w : b.words())
        put<uint64_t>(out, w);
}

void get_bitmask(std::istream& in, node_bits& nb, uint64_t node) {
    auto nbits = get<uint64_t>(in);
    if (nbits == 0)
        return;
    std::vector<uint64_t> words((nbits + 63) / 64);
    for (auto& w : words)
        w = get<uint64_t>(in);
    nb.set_node(node, bit_vector::from_raw(nbits, std::move(words)));
}

void save_wavelet(const index_file& idx, std::ostream& out) {
    const wavelet_tree& wt = *idx.wavelet;
    put<uint64_t>(out, wt.size());
    put<uint64_t>(out, wt.sigma());
    put<uint32_t>(out, wt.height());
    put<uint32_t>(out, wt.tau());
    uint64_t inner = uint64_t(1) << wt.height();
    for (uint64_t v = 1; v < inner; ++v)
        put_bitmask(out, wt.bitmasks(), v);
}

void load_wavelet(index_file& idx, std::istream& in) {
    auto n = get<uint64_t>(in);
    auto sigma = get<uint64_t>(in);
    auto height = get<uint32_t>(in);
    auto tau = get<uint32_t>(in);
    node_bits bits(uint64_t(1) << height);
    uint64_t inner = uint64_t(1) << height;
    for (uint64_t v = 1; v < inner; ++v)
        get_bitmask(in, bits, v);
    idx.wavelet = std::make_unique<wavelet_tree>(
        wavelet_tree::from_parts(n, sigma, height, tau, std::move(bits)));
}

void save_range(const index_file& idx, std::ostream& out) {
    const range_index& ri = *idx.range;
    put<uint64_t>(out, ri.size());
    put<uint32_t>(out, ri.tree().degree());
    put<uint32_t>(out, ri.tree().level_count());
    put<uint64_t>(out, ri.distinct_values().size());
    for (int64_t v : ri.distinct_values())
        put<int64_t>(out, v);
    for (uint32_t k = 0; k < ri.tree().level_count(); ++k) {
        const auto& lv = ri.tree().level(k);
        put<uint64_t>(out, lv.size());
        for (const digit_tree::node& nd : lv) {
            put<uint64_t>(out, nd.prefix);
            put<uint32_t>(out, nd.digits.width_bits());
            put<uint64_t>(out, nd.digits.size());
            put_words(out, nd.digits.words());
        }
    }
}

void load_range(index_file& idx, std::istream& in) {
    auto n = get<uint64_t>(in);
    auto degree = get<uint32_t>(in);
    auto levels = get<uint32_t>(in);
    auto ucount = get<uint64_t>(in);
    std::vector<int64_t> uniq(ucount);
    for (auto& v : uniq)
        v = get<int64_t>(in);
    std::vector<std::vector<digit_tree::node>> lv(levels);
    for (uint32_t k = 0; k < levels; ++k) {
        auto cnt = get<uint64_t>(in);
        lv[k].resize(cnt);
        for (auto& nd : lv[k]) {
            nd.prefix = get<uint64_t>(in);
            auto width = get<uint32_t>(in);
            auto len = get<uint64_t>(in);
            nd.digits = packed_list::from_raw(width, len, get_words(in));
        }
    }
    idx.range = std::make_unique<range_index>(
        range_index::from_parts(n, std::move(uniq), digit_tree::from_parts(degree == 0 ? 2 : degree, n, std::move(lv))));
}

void save_text(const index_file& idx, std::ostream& out) {
    put<uint64_t>(out, idx.text.size());
    for (uint32_t c : idx.text)
        put<uint32_t>(out, c);
}

std::vector<uint32_t> load_text(std::istream& in) {
    auto n = get<uint64_t>(in);
    std::vector<uint32_t> text(n);
    for (auto& c : text)
        c = get<uint32_t>(in);
    return text;
}

void save_wst(const index_file& idx, std::ostream& out) {
    save_text(idx, out);
    const text_index& ti = *idx.ti;
    for (uint64_t r = 1; r <= ti.n() + 1; ++r)
        put<uint32_t>(out, uint32_t(ti.sa(r)));
    const wavelet_suffix_tree& t = *idx.wst;
    put<uint32_t>(out, t.node_count());
    put<uint32_t>(out, t.root());
    for (uint32_t v = 0; v < t.node_count(); ++v) {
        const auto& nd = t.node(v);
        put<uint32_t>(out, nd.left);
        put<uint32_t>(out, nd.right);
        put<uint32_t>(out, nd.leaf_lo);
        put<uint32_t>(out, nd.leaf_hi);
        put<uint64_t>(out, nd.level);
    }
    for (uint32_t v = 0; v < t.node_count(); ++v)
        put_bitmask(out, t.pos_bits(), v);
    for (uint32_t v = 0; v < t.node_count(); ++v)
        put_bitmask(out, t.chr_bits(), v);
}

void load_wst(index_file& idx, std::istream& in) {
    idx.text = load_text(in);
    uint64_t n = idx.text.size();
    std::vector<uint32_t> shifted(n + 1);
    for (uint64_t i = 0; i < n; ++i)
        shifted[i] = idx.text[i] + 1;
    shifted[n] = 0;
    std::vector<uint32_t> sa(n + 1);
    for (auto& r : sa)
        r = get<uint32_t>(in);
    idx.ti = std::make_unique<text_index>(text_index::from_parts(std::move(shifted), std::move(sa)));

    auto count = get<uint32_t>(in);
    auto root = get<uint32_t>(in);
    std::vector<wavelet_suffix_tree::tnode> nodes(count);
    for (auto& nd : nodes) {
        nd.left = get<uint32_t>(in);
        nd.right = get<uint32_t>(in);
        nd.leaf_lo = get<uint32_t>(in);
        nd.leaf_hi = get<uint32_t>(in);
        nd.level = get<uint64_t>(in);
    }
    node_bits pos(count), chr(count);
    for (uint32_t v = 0; v < count; ++v)
        get_bitmask(in, pos, v);
    for (uint32_t v = 0; v < count; ++v)
        get_bitmask(in, chr, v);
    idx.wst = std::make_unique<wavelet_suffix_tree>(wavelet_suffix_tree::from_parts(
        *idx.ti, std::move(nodes), root, std::move(pos), std::move(chr)));
}

void save_scaled(const index_file& idx, std::ostream& out) {
    save_text(idx, out);
}

void load_scaled(index_file& idx, std::istream& in) {
    idx.text = load_text(in);
    idx.ti = std::make_unique<text_index>(idx.text);
    idx.scaled = std::make_unique<scaled_index>(*idx.ti);
}

} // namespace

void save_index(const index_file& idx, std::ostream& out) {
    put_bytes(out, kMagic, 8);
    put<uint32_t>(out, kVersion);
    put<uint32_t>(out, uint32_t(idx.kind));
    put<uint32_t>(out, uint32_t(idx.format));
    put<uint32_t>(out, 0);
    switch (idx.kind) {
    case index_kind::wavelet: save_wavelet(idx, out); break;
    case index_kind::range: save_range(idx, out); break;
    case index_kind::wst: save_wst(idx, out); break;
    case index_kind::scaled: save_scaled(idx, out); break;
    }
}

index_file load_index(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("index file: bad magic bytes");
    auto version = get<uint32_t>(in);
    if (version != kVersion)
        throw std::runtime_error("index file: unsupported format version " +
                                 std::to_string(version));
    index_file idx;
    idx.kind = index_kind(get<uint32_t>(in));
    idx.format = input_format(get<uint32_t>(in));
    get<uint32_t>(in);
    switch (idx.kind) {
    case index_kind::wavelet: load_wavelet(idx, in); break;
    case index_kind::range: load_range(idx, in); break;
    case index_kind::wst: load_wst(idx, in); break;
    case index_kind::scaled: load_scaled(idx, in); break;
    default: throw std::runtime_error("index file: unknown structure kind");
    }
    return idx;
}

} // namespace wavetk::cli
