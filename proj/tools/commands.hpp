#ifndef WAVETK_TOOLS_COMMANDS_HPP
#define WAVETK_TOOLS_COMMANDS_HPP

#include "index_file.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wavetk::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_data = 2;
inline constexpr int exit_verify = 3;

struct build_args {
    std::string input_path;
    std::string output_path;
    std::string kind = "wavelet";
    std::string format = "text"; // text | dec | bin
    uint32_t degree = 8;
    std::optional<uint32_t> tau;
};
int cmd_build(const build_args& args, std::ostream& out, std::ostream& err);

struct query_args {
    std::string index_path;
    std::string queries_path;
    uint32_t threads = 1;
};
int cmd_query(const query_args& args, std::ostream& out, std::ostream& err);

struct verify_args {
    uint64_t seed = 1;
    std::vector<uint64_t> sizes = {256, 1500};
    uint32_t trials = 2;
    std::string inject_fault; // suite name; test hook forcing a failure
};
int cmd_verify(const verify_args& args, std::ostream& out, std::ostream& err);

struct bench_args {
    std::string kind = "wavelet"; // wavelet | range | successor | wst
    std::vector<uint64_t> n_list = {100000};
    std::vector<uint64_t> q_list = {10000};
    uint64_t seed = 1;
};
int cmd_bench(const bench_args& args, std::ostream& out, std::ostream& err);

// Helpers shared with the tests.
std::vector<uint32_t> parse_text_input(const std::string& bytes);
std::optional<std::vector<int64_t>> parse_dec_input(const std::string& bytes);
std::vector<int64_t> parse_bin_input(const std::string& bytes);

} // namespace wavetk::cli

#endif
