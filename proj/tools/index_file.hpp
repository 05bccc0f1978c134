#ifndef WAVETK_TOOLS_INDEX_FILE_HPP
#define WAVETK_TOOLS_INDEX_FILE_HPP

#include "wavetk/range_index.hpp"
#include "wavetk/scaled_index.hpp"
#include "wavetk/wavelet_suffix_tree.hpp"
#include "wavetk/wavelet_tree.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace wavetk::cli {

enum class index_kind : uint32_t { wavelet = 0, range = 1, wst = 2, scaled = 3 };
enum class input_format : uint32_t { text = 0, dec = 1, bin = 2 };

// On-disk layout: 8 magic bytes, format version, kind and input-format tags,
// then a little-endian word payload per kind. Loading re-derives rank/select
// and RMQ accelerators from the stored core arrays; the scaled kind stores
// the text and rebuilds its covered trees.
struct index_file {
    index_kind kind = index_kind::wavelet;
    input_format format = input_format::text;

    std::unique_ptr<wavelet_tree> wavelet;
    std::unique_ptr<range_index> range;

    std::vector<uint32_t> text; // original characters for wst/scaled kinds
    std::unique_ptr<text_index> ti;
    std::unique_ptr<wavelet_suffix_tree> wst;
    std::unique_ptr<scaled_index> scaled;
};

void save_index(const index_file& idx, std::ostream& out);
// Throws std::runtime_error with a diagnostic on bad magic or version; the
// version check happens before any payload is touched.
index_file load_index(std::istream& in);

} // namespace wavetk::cli

#endif
