#include "wavetk/rmq.hpp"

#include <algorithm>
#include <bit>

namespace wavetk {

namespace {

inline uint32_t floor_log2(uint64_t v) {
    return 63 - std::countl_zero(v);
}

} // namespace

block_rmq::block_rmq(std::span<const uint32_t> values) : v_(values.data()), n_(values.size()) {
    nb_ = (n_ + kBlock - 1) / kBlock;
    if (nb_ == 0)
        return;
    levels_ = floor_log2(nb_) + 1;
    table_.resize(levels_ * nb_);
    for (uint64_t b = 0; b < nb_; ++b) {
        uint32_t m = UINT32_MAX;
        for (uint64_t i = b * kBlock; i < std::min(n_, (b + 1) * kBlock); ++i)
            m = std::min(m, v_[i]);
        table_[b] = m;
    }
    for (uint32_t l = 1; l < levels_; ++l)
        for (uint64_t b = 0; b + (uint64_t(1) << l) <= nb_; ++b)
            table_[l * nb_ + b] = std::min(table_[(l - 1) * nb_ + b],
                                           table_[(l - 1) * nb_ + b + (uint64_t(1) << (l - 1))]);
}

uint32_t block_rmq::min_in(uint64_t lo, uint64_t hi) const {
    uint32_t m = UINT32_MAX;
    uint64_t b_lo = lo / kBlock, b_hi = (hi - 1) / kBlock;
    if (b_lo == b_hi) {
        for (uint64_t i = lo; i < hi; ++i)
            m = std::min(m, v_[i]);
        return m;
    }
    for (uint64_t i = lo; i < (b_lo + 1) * kBlock; ++i)
        m = std::min(m, v_[i]);
    for (uint64_t i = b_hi * kBlock; i < hi; ++i)
        m = std::min(m, v_[i]);
    if (b_lo + 1 <= b_hi - 1) {
        uint64_t a = b_lo + 1, b = b_hi; // block range [a, b)
        uint32_t l = floor_log2(b - a);
        m = std::min(m, std::min(table_[l * nb_ + a], table_[l * nb_ + b - (uint64_t(1) << l)]));
    }
    return m;
}

packed_minmax::packed_minmax(const packed_list& values) {
    uint64_t n = values.size();
    nb_ = (n + kBlock - 1) / kBlock;
    if (nb_ == 0)
        return;
    levels_ = floor_log2(nb_) + 1;
    mins_.resize(levels_ * nb_);
    maxs_.resize(levels_ * nb_);
    for (uint64_t b = 0; b < nb_; ++b) {
        uint64_t mn = UINT64_MAX, mx = 0;
        for (uint64_t i = b * kBlock; i < std::min(n, (b + 1) * kBlock); ++i) {
            uint64_t v = values.get(i);
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        mins_[b] = mn;
        maxs_[b] = mx;
    }
    for (uint32_t l = 1; l < levels_; ++l)
        for (uint64_t b = 0; b + (uint64_t(1) << l) <= nb_; ++b) {
            mins_[l * nb_ + b] = std::min(mins_[(l - 1) * nb_ + b],
                                          mins_[(l - 1) * nb_ + b + (uint64_t(1) << (l - 1))]);
            maxs_[l * nb_ + b] = std::max(maxs_[(l - 1) * nb_ + b],
                                          maxs_[(l - 1) * nb_ + b + (uint64_t(1) << (l - 1))]);
        }
}

uint64_t packed_minmax::min_in(const packed_list& values, uint64_t lo, uint64_t hi) const {
    uint64_t m = UINT64_MAX;
    uint64_t b_lo = lo / kBlock, b_hi = (hi - 1) / kBlock;
    if (b_lo == b_hi) {
        for (uint64_t i = lo; i < hi; ++i)
            m = std::min(m, values.get(i));
        return m;
    }
    for (uint64_t i = lo; i < (b_lo + 1) * kBlock; ++i)
        m = std::min(m, values.get(i));
    for (uint64_t i = b_hi * kBlock; i < hi; ++i)
        m = std::min(m, values.get(i));
    if (b_lo + 1 <= b_hi - 1) {
        uint64_t a = b_lo + 1, b = b_hi;
        uint32_t l = floor_log2(b - a);
        m = std::min(m, std::min(mins_[l * nb_ + a], mins_[l * nb_ + b - (uint64_t(1) << l)]));
    }
    return m;
}

uint64_t packed_minmax::max_in(const packed_list& values, uint64_t lo, uint64_t hi) const {
    uint64_t m = 0;
    bool any = false;
    uint64_t b_lo = lo / kBlock, b_hi = (hi - 1) / kBlock;
    auto scan = [&](uint64_t a, uint64_t b) {
        for (uint64_t i = a; i < b; ++i) {
            m = std::max(m, values.get(i));
            any = true;
        }
    };
    if (b_lo == b_hi) {
        scan(lo, hi);
        return m;
    }
    scan(lo, (b_lo + 1) * kBlock);
    scan(b_hi * kBlock, hi);
    if (b_lo + 1 <= b_hi - 1) {
        uint64_t a = b_lo + 1, b = b_hi;
        uint32_t l = floor_log2(b - a);
        m = std::max(m, std::max(maxs_[l * nb_ + a], maxs_[l * nb_ + b - (uint64_t(1) << l)]));
        any = true;
    }
    (void)any;
    return m;
}

} // namespace wavetk
