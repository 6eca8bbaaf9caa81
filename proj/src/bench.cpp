#include "parstream/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <stdexcept>

#include "parstream/primes.hpp"
#include "parstream/scheduler.hpp"

namespace parstream::bench {

const char* workload_name(workload w) {
    switch (w) {
        case workload::primes: return "primes";
        case workload::primes_x3: return "primes_x3";
        case workload::stream: return "stream";
        case workload::stream_big: return "stream_big";
        case workload::list: return "list";
        case workload::list_big: return "list_big";
    }
    throw std::logic_error("unknown workload");
}

workload workload_from_name(std::string_view name) {
    for (workload w : {workload::primes, workload::primes_x3, workload::stream,
                       workload::stream_big, workload::list, workload::list_big}) {
        if (name == workload_name(w)) return w;
    }
    throw std::invalid_argument("unknown workload name: " + std::string(name));
}

std::string mode_label(const bench_config& config) {
    if (config.mode == run_mode::seq) return "seq";
    return "par(" + std::to_string(config.workers) + ")";
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

bool is_poly_workload(workload w) {
    return w == workload::stream || w == workload::stream_big || w == workload::list ||
           w == workload::list_big;
}

bool is_big_workload(workload w) {
    return w == workload::stream_big || w == workload::list_big;
}

bool is_list_workload(workload w) {
    return w == workload::list || w == workload::list_big;
}

void validate(const bench_config& c) {
    if (c.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    if (c.mode == run_mode::par && c.workers < 1)
        throw std::invalid_argument("par mode needs a positive worker count");
    if (c.primes_n < 2) throw std::invalid_argument("primes_n must be >= 2");
    if (c.fateman_k < 1 || c.fateman_vars < 1)
        throw std::invalid_argument("fateman parameters must be >= 1");
}

double elapsed_seconds(std::chrono::steady_clock::time_point a,
                       std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

std::string format_seconds(double s, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, s);
    return buf;
}

}  // namespace

bench_result run(const bench_config& config) {
    validate(config);

    bench_result result;
    result.config = config;

    // Polynomial inputs are fixed by (k, vars, big); build them once,
    // outside any timed region, and re-wrap per repetition.
    const poly_ring ring{config.fateman_vars};
    std::vector<term> p_terms;
    std::vector<term> q_terms;
    if (is_poly_workload(config.work)) {
        auto [p, q] = fateman_input(config.fateman_k, config.fateman_vars,
                                    is_big_workload(config.work));
        p_terms = to_terms(p);
        q_terms = to_terms(q);
    }
    const std::int64_t prime_bound =
        config.work == workload::primes_x3 ? config.primes_n * 3 : config.primes_n;

    bool have_checksum = false;
    const unsigned total_runs = config.warmup_runs + config.repetitions;
    for (unsigned rep = 0; rep < total_runs; ++rep) {
        std::shared_ptr<scheduler> pool;
        eval_context ctx = eval_context::lazy();
        if (config.mode == run_mode::par) {
            pool = std::make_shared<scheduler>(config.workers);
            ctx = eval_context::async(pool);
        }

        std::uint64_t checksum = 0;
        double seconds = 0.0;
        if (!is_poly_workload(config.work)) {
            const auto t0 = std::chrono::steady_clock::now();
            stream<std::int64_t> ps = primes_up_to(prime_bound, ctx);
            const auto t1 = std::chrono::steady_clock::now();
            seconds = elapsed_seconds(t0, t1);
            checksum = to_vector(ps).size();
        } else {
            polynomial px = from_terms(p_terms, ring, ctx);
            polynomial qx = from_terms(q_terms, ring, ctx);
            force_all(px.terms());
            force_all(qx.terms());
            if (pool) pool->drain();
            const auto t0 = std::chrono::steady_clock::now();
            polynomial prod = is_list_workload(config.work)
                                  ? times_data_parallel(px, qx, ctx)
                                  : times(px, qx);
            force_all(prod.terms());
            const auto t1 = std::chrono::steady_clock::now();
            seconds = elapsed_seconds(t0, t1);
            checksum = fnv1a64(to_string(prod));
        }
        if (pool) {
            pool->drain();
            pool->shutdown();
        }

        if (have_checksum && checksum != result.checksum)
            throw std::runtime_error(std::string("checksum changed between repetitions of ") +
                                     workload_name(config.work));
        result.checksum = checksum;
        have_checksum = true;
        if (rep >= config.warmup_runs) result.seconds.push_back(seconds);
    }

    std::vector<double> sorted = result.seconds;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    result.min_seconds = sorted.front();
    result.median_seconds =
        n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    return result;
}

namespace {

// seq sorts before par(1) before par(2), ...
struct column_key {
    bool par;
    unsigned workers;
    auto operator<=>(const column_key&) const = default;
};

column_key column_of(const bench_config& c) {
    return {c.mode == run_mode::par, c.mode == run_mode::par ? c.workers : 0};
}

std::string render_table(const std::vector<bench_result>& results) {
    std::map<column_key, std::string> columns;
    std::map<std::pair<int, column_key>, double> cells;  // (workload rank, column) -> median
    for (const auto& r : results) {
        const column_key col = column_of(r.config);
        columns.emplace(col, mode_label(r.config));
        const auto key = std::make_pair(static_cast<int>(r.config.work), col);
        if (!cells.emplace(key, r.median_seconds).second)
            throw std::invalid_argument("duplicate (workload, mode) cell in report");
    }

    constexpr workload row_order[] = {workload::primes,     workload::primes_x3,
                                      workload::stream,     workload::stream_big,
                                      workload::list,       workload::list_big};
    std::size_t name_width = 8;
    for (const auto& r : results)
        name_width = std::max(name_width, std::string(workload_name(r.config.work)).size());

    std::string out;
    out += std::string(name_width, ' ');
    for (const auto& [col, label] : columns) {
        out += "  ";
        out += std::string(label.size() < 7 ? 7 - label.size() : 0, ' ');
        out += label;
    }
    out += '\n';
    for (workload w : row_order) {
        bool row_present = false;
        for (const auto& [key, value] : cells)
            if (key.first == static_cast<int>(w)) row_present = true;
        if (!row_present) continue;
        std::string name = workload_name(w);
        out += name + std::string(name_width - name.size(), ' ');
        for (const auto& [col, label] : columns) {
            const auto it = cells.find({static_cast<int>(w), col});
            std::string text =
                it == cells.end() ? std::string() : format_seconds(it->second, "%.1f");
            const std::size_t width = std::max<std::size_t>(label.size(), 7);
            out += "  ";
            out += std::string(width > text.size() ? width - text.size() : 0, ' ');
            out += text;
        }
        out += '\n';
    }
    return out;
}

std::string render_csv(const std::vector<bench_result>& results) {
    std::string out = "workload,mode,workers,rep,seconds,checksum\n";
    for (const auto& r : results) {
        const char* mode = r.config.mode == run_mode::par ? "par" : "seq";
        const unsigned workers = r.config.mode == run_mode::par ? r.config.workers : 0;
        for (std::size_t i = 0; i < r.seconds.size(); ++i) {
            out += workload_name(r.config.work);
            out += ',';
            out += mode;
            out += ',';
            out += std::to_string(workers);
            out += ',';
            out += std::to_string(i);
            out += ',';
            out += format_seconds(r.seconds[i], "%.6f");
            out += ',';
            out += std::to_string(r.checksum);
            out += '\n';
        }
    }
    return out;
}

}  // namespace

std::string report(const std::vector<bench_result>& results, report_format fmt) {
    if (results.empty()) throw std::invalid_argument("report: no results");
    return fmt == report_format::table ? render_table(results) : render_csv(results);
}

}  // namespace parstream::bench
