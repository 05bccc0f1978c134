#ifndef WAVETK_RMQ_HPP
#define WAVETK_RMQ_HPP

#include "wavetk/packed_list.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wavetk {

// Sparse-table range minimum over block minima (block = 32 entries), with the
// partial blocks at the range ends scanned directly. Values are read through
// a stored pointer; the owner keeps the underlying array alive.
class block_rmq {
public:
    static constexpr uint64_t kBlock = 32;

    block_rmq() = default;
    explicit block_rmq(std::span<const uint32_t> values);

    // Minimum value in [lo, hi), 0-based; hi > lo.
    uint32_t min_in(uint64_t lo, uint64_t hi) const;

private:
    const uint32_t* v_ = nullptr;
    uint64_t n_ = 0;
    uint64_t nb_ = 0;
    std::vector<uint32_t> table_; // level-major sparse table of block minima
    uint32_t levels_ = 0;
};

// Range minimum and maximum values over a packed list, same layout.
class packed_minmax {
public:
    static constexpr uint64_t kBlock = 32;

    packed_minmax() = default;
    explicit packed_minmax(const packed_list& values);

    uint64_t min_in(const packed_list& values, uint64_t lo, uint64_t hi) const;
    uint64_t max_in(const packed_list& values, uint64_t lo, uint64_t hi) const;

private:
    uint64_t nb_ = 0;
    uint32_t levels_ = 0;
    std::vector<uint64_t> mins_;
    std::vector<uint64_t> maxs_;
};

} // namespace wavetk

#endif
