#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parstream/bench.hpp"

namespace bench = parstream::bench;

namespace {

struct cli_options {
    std::string workload = "primes";
    std::string mode = "seq";
    unsigned workers = 1;
    unsigned reps = 5;
    unsigned warmup = 2;
    std::int64_t primes_n = 5000;
    unsigned fateman_k = 8;
    bool big = false;
    std::string format = "table";
    std::string out;
    std::vector<unsigned> matrix_workers = {1, 2};
};

void add_common_flags(CLI::App* cmd, cli_options& opt) {
    cmd->add_option("--reps", opt.reps, "Measured repetitions per cell")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--warmup", opt.warmup, "Warmup runs per cell (untimed)");
    cmd->add_option("--primes-n", opt.primes_n,
                    "Sieve bound for the primes workload (primes_x3 runs to 3x)")
        ->check(CLI::Range(static_cast<std::int64_t>(2), static_cast<std::int64_t>(1) << 40));
    cmd->add_option("--fateman-k", opt.fateman_k,
                    "Power k of (1 + x1 + x2 + x3) in the polynomial workloads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"table", "csv"}));
    cmd->add_option("--out", opt.out, "Write the report to FILE instead of stdout");
}

bench::report_format format_of(const cli_options& opt) {
    return opt.format == "csv" ? bench::report_format::csv : bench::report_format::table;
}

void emit(const std::string& text, const cli_options& opt) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << text;
}

bench::bench_config base_config(const cli_options& opt) {
    bench::bench_config cfg;
    cfg.repetitions = opt.reps;
    cfg.warmup_runs = opt.warmup;
    cfg.primes_n = opt.primes_n;
    cfg.fateman_k = opt.fateman_k;
    return cfg;
}

int run_single(const cli_options& opt) {
    bench::bench_config cfg = base_config(opt);
    cfg.work = bench::workload_from_name(opt.workload);
    if (opt.big) {
        if (cfg.work == bench::workload::stream) cfg.work = bench::workload::stream_big;
        if (cfg.work == bench::workload::list) cfg.work = bench::workload::list_big;
    }
    cfg.mode = opt.mode == "par" ? bench::run_mode::par : bench::run_mode::seq;
    cfg.workers = opt.workers;

    std::fprintf(stderr, "running %s %s ...\n", bench::workload_name(cfg.work),
                 bench::mode_label(cfg).c_str());
    const bench::bench_result result = bench::run(cfg);
    std::fprintf(stderr, "  median %.3fs  min %.3fs  checksum %llu\n",
                 result.median_seconds, result.min_seconds,
                 static_cast<unsigned long long>(result.checksum));
    emit(bench::report({result}, format_of(opt)), opt);
    return 0;
}

int run_matrix(const cli_options& opt) {
    std::vector<bench::bench_config> grid;
    for (bench::workload w :
         {bench::workload::primes, bench::workload::primes_x3, bench::workload::stream,
          bench::workload::stream_big, bench::workload::list, bench::workload::list_big}) {
        bench::bench_config cfg = base_config(opt);
        cfg.work = w;
        cfg.mode = bench::run_mode::seq;
        grid.push_back(cfg);
        for (unsigned workers : opt.matrix_workers) {
            cfg.mode = bench::run_mode::par;
            cfg.workers = workers;
            grid.push_back(cfg);
        }
    }

    std::vector<bench::bench_result> results;
    results.reserve(grid.size());
    for (const auto& cfg : grid) {
        std::fprintf(stderr, "running %s %s ...\n", bench::workload_name(cfg.work),
                     bench::mode_label(cfg).c_str());
        results.push_back(bench::run(cfg));
        std::fprintf(stderr, "  median %.3fs  checksum %llu\n",
                     results.back().median_seconds,
                     static_cast<unsigned long long>(results.back().checksum));
    }

    // The same workload must produce the same value no matter how it was
    // scheduled; a mismatch is a correctness failure, not a perf result.
    bool mismatch = false;
    std::map<int, std::set<std::uint64_t>> sums;
    for (const auto& r : results)
        sums[static_cast<int>(r.config.work)].insert(r.checksum);
    for (const auto& [w, set] : sums) {
        if (set.size() > 1) {
            std::fprintf(stderr, "error: checksum mismatch between modes of %s\n",
                         bench::workload_name(static_cast<bench::workload>(w)));
            mismatch = true;
        }
    }

    emit(bench::report(results, format_of(opt)), opt);
    return mismatch ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stream-suspension benchmark harness"};
    app.require_subcommand(1);
    cli_options opt;

    CLI::App* run_cmd = app.add_subcommand("run", "Run a single (workload, mode) cell");
    run_cmd->add_option("--workload", opt.workload, "Workload name")
        ->check(CLI::IsMember({"primes", "primes_x3", "stream", "stream_big", "list",
                               "list_big"}));
    run_cmd->add_option("--mode", opt.mode, "Evaluation mode")
        ->check(CLI::IsMember({"seq", "par"}));
    run_cmd->add_option("--workers", opt.workers, "Worker count for par mode")
        ->check(CLI::PositiveNumber);
    run_cmd->add_flag("--big", opt.big, "Use the big-coefficient polynomial variant");
    add_common_flags(run_cmd, opt);

    CLI::App* matrix_cmd =
        app.add_subcommand("matrix", "Run the full workload x mode grid");
    matrix_cmd->add_option("--workers", opt.matrix_workers,
                           "Worker counts for the par columns");
    add_common_flags(matrix_cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return run_single(opt);
        return run_matrix(opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
