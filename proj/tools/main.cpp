#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

std::vector<uint64_t> parse_csv(const std::string& csv) {
    std::vector<uint64_t> out;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string::npos)
            comma = csv.size();
        out.push_back(std::stoull(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Succinct wavelet-tree structures: build, query, verify, bench"};
    app.require_subcommand(1);

    wavetk::cli::build_args build;
    CLI::App* cb = app.add_subcommand("build", "Build an index file from a corpus");
    cb->add_option("--input", build.input_path, "Input file")->required();
    cb->add_option("--output", build.output_path, "Index file to write")->required();
    cb->add_option("--kind", build.kind, "Structure kind: wavelet|range|wst|scaled");
    cb->add_option("--input-format", build.format, "Input encoding: text|dec|bin");
    cb->add_option("--d", build.degree, "Tree degree for the range index");
    uint32_t tau_flag = 0;
    cb->add_option("--tau", tau_flag, "Big-node stride override");

    wavetk::cli::query_args query;
    CLI::App* cq = app.add_subcommand("query", "Answer a query file against an index");
    cq->add_option("--index", query.index_path, "Index file")->required();
    cq->add_option("--queries", query.queries_path, "Query file, one record per line")->required();
    cq->add_option("--threads", query.threads, "Worker threads (answers stay in input order)");

    wavetk::cli::verify_args verify;
    std::string sizes_csv;
    CLI::App* cv = app.add_subcommand("verify", "Run the oracle cross-check suites");
    cv->add_option("--seed", verify.seed, "Deterministic seed");
    cv->add_option("--sizes", sizes_csv, "Comma-separated instance sizes");
    cv->add_option("--trials", verify.trials, "Repetitions per suite");
    cv->add_option("--inject-fault", verify.inject_fault,
                   "Force one mismatch in the named suite (self-test hook)");

    wavetk::cli::bench_args bench;
    std::string n_csv, q_csv;
    CLI::App* cn = app.add_subcommand("bench", "Timing table on synthetic data");
    cn->add_option("--kind", bench.kind, "wavelet|range|successor|wst");
    cn->add_option("--n", n_csv, "Comma-separated input sizes");
    cn->add_option("--q", q_csv, "Comma-separated query counts");
    cn->add_option("--seed", bench.seed, "Deterministic seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : wavetk::cli::exit_usage;
    }

    try {
        if (cb->parsed()) {
            if (tau_flag)
                build.tau = tau_flag;
            return wavetk::cli::cmd_build(build, std::cout, std::cerr);
        }
        if (cq->parsed())
            return wavetk::cli::cmd_query(query, std::cout, std::cerr);
        if (cv->parsed()) {
            if (!sizes_csv.empty())
                verify.sizes = parse_csv(sizes_csv);
            return wavetk::cli::cmd_verify(verify, std::cout, std::cerr);
        }
        if (cn->parsed()) {
            if (!n_csv.empty())
                bench.n_list = parse_csv(n_csv);
            if (!q_csv.empty())
                bench.q_list = parse_csv(q_csv);
            return wavetk::cli::cmd_bench(bench, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "wavetk: " << e.what() << "\n";
        return wavetk::cli::exit_data;
    }
    return wavetk::cli::exit_usage;
}
