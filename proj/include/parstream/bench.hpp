#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "parstream/polynomial.hpp"

namespace parstream::bench {

/// The experiment axes: two prime-sieve sizes, the streaming polynomial
/// product with small and big coefficients, and the data-parallel control
/// in the same two flavors.
enum class workload { primes, primes_x3, stream, stream_big, list, list_big };

/// seq runs everything call-by-need on the calling thread; par backs the
/// suspensions with a worker pool.
enum class run_mode { seq, par };

enum class report_format { table, csv };

struct bench_config {
    workload work = workload::primes;
    run_mode mode = run_mode::seq;
    unsigned workers = 1;           // par only
    unsigned repetitions = 5;
    unsigned warmup_runs = 2;
    std::int64_t primes_n = 5000;   // primes_x3 runs to 3 * primes_n
    unsigned fateman_k = 8;
    std::uint32_t fateman_vars = 3;
};

struct bench_result {
    bench_config config;
    std::vector<double> seconds;    // one entry per measured repetition
    double median_seconds = 0.0;
    double min_seconds = 0.0;
    // Prime count, or FNV-1a of the rendered product polynomial. Must be
    // identical across modes for the same workload parameters.
    std::uint64_t checksum = 0;
};

const char* workload_name(workload w);

/// Parses a workload_name() string; throws std::invalid_argument.
workload workload_from_name(std::string_view name);

/// "seq", or "par(N)" with the worker count.
std::string mode_label(const bench_config& config);

std::uint64_t fnv1a64(std::string_view s);

/// Executes warmups then repetitions of the configured workload, timing
/// only the workload itself (polynomial input construction is excluded).
/// Each repetition owns a fresh scheduler, drained and shut down before
/// the next one starts. Aborts with std::runtime_error if the checksum
/// is not identical across repetitions.
bench_result run(const bench_config& config);

/// TABLE: rows are workloads, columns seq/par(1)/par(2)/... with median
/// seconds to one decimal, blank where a cell was not requested. CSV:
/// one row per repetition with columns workload, mode, workers, rep,
/// seconds, checksum. Empty input or a duplicate (workload, mode) cell
/// is rejected.
std::string report(const std::vector<bench_result>& results, report_format fmt);

}  // namespace parstream::bench
