#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chainsched/generator.hpp"

namespace chainsched {

// One sweep of the end-to-end pipeline over growing stream counts, timing
// each phase separately so the decision test and the recursive construction
// can be examined independently.
struct BenchConfig {
    std::vector<int> stream_counts;
    int switches = 32;
    int repeats = 3;
    GenSpec::IntervalModel profile = GenSpec::IntervalModel::hub;
    std::vector<std::pair<int, int>> period_exponent_weights = {
        {6, 1}, {7, 1}, {8, 2}, {9, 4}, {10, 8}};
    std::uint64_t seed = 1;
    bool feasible_only = false;
    int max_attempts = 100;
};

struct BenchRow {
    int stream_count = 0;
    int switches = 0;
    std::string profile;
    bool feasible = false;
    // Medians over the repeats, in milliseconds.
    double decide_ms = 0;
    double find_ms = 0;
    double synthesize_ms = 0;
    double validate_ms = 0;
    double total_ms = 0;
};

// Runs one warmup pass per point, then `repeats` timed passes, reporting
// medians. Infeasible points time decide only. `progress`, when non-null,
// receives one line per point.
std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream* progress);

// CSV schema v1, one row per point:
//   schema_version,stream_count,switches,profile,feasible,
//   decide_ms,find_ms,synthesize_ms,validate_ms,total_ms
std::string bench_csv(const std::vector<BenchRow>& rows);

// Doubling sweep from `start` up to and including at least `max_streams`.
std::vector<int> doubling_counts(int start, int max_streams);

}  // namespace chainsched
