#include "chainsched/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "chainsched/feasibility.hpp"
#include "chainsched/schedule.hpp"
#include "chainsched/validator.hpp"

namespace chainsched {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median(std::vector<double> values) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return (values[mid - 1] + values[mid]) / 2.0;
}

struct PassTiming {
    double decide_ms = 0;
    double find_ms = 0;
    double synthesize_ms = 0;
    double validate_ms = 0;
    bool feasible = false;
};

PassTiming run_pipeline(const NormalizedInstances& norm) {
    PassTiming t;
    auto start = Clock::now();
    const Feasibility ltr = decide(norm.left_to_right);
    const Feasibility rtl = decide(norm.right_to_left);
    t.decide_ms = ms_since(start);
    t.feasible = ltr.feasible && rtl.feasible;
    if (!t.feasible) return t;

    start = Clock::now();
    const GoodColoring coloring_ltr = find(norm.left_to_right);
    const GoodColoring coloring_rtl = find(norm.right_to_left);
    t.find_ms = ms_since(start);

    start = Clock::now();
    const Schedule schedule_ltr = synthesize(coloring_ltr, norm.left_to_right);
    const Schedule schedule_rtl = synthesize(coloring_rtl, norm.right_to_left);
    t.synthesize_ms = ms_since(start);

    start = Clock::now();
    const ValidationReport report_ltr = validate(schedule_ltr, norm.left_to_right);
    const ValidationReport report_rtl = validate(schedule_rtl, norm.right_to_left);
    t.validate_ms = ms_since(start);
    if (!report_ltr.pass() || !report_rtl.pass())
        throw InternalError("bench: synthesized schedule failed validation");
    return t;
}

}  // namespace

std::vector<int> doubling_counts(int start, int max_streams) {
    std::vector<int> counts;
    for (int c = start; c < max_streams; c *= 2) counts.push_back(c);
    counts.push_back(max_streams);
    return counts;
}

std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream* progress) {
    std::vector<BenchRow> rows;
    for (int count : config.stream_counts) {
        GenSpec spec;
        spec.switches = config.switches;
        spec.stream_count = count;
        spec.period_exponent_weights = config.period_exponent_weights;
        spec.interval_model = config.profile;
        spec.seed = config.seed + static_cast<std::uint64_t>(count);
        spec.feasible_only = config.feasible_only;
        spec.max_attempts = config.max_attempts;

        const RawInstance raw = generate(spec);
        const NormalizedInstances norm =
            normalize(raw.topology, raw.streams, PeriodPolicy::reject);

        run_pipeline(norm);  // warmup

        std::vector<double> decide_ms, find_ms, synthesize_ms, validate_ms, total_ms;
        BenchRow row;
        for (int r = 0; r < std::max(1, config.repeats); r++) {
            const PassTiming t = run_pipeline(norm);
            row.feasible = t.feasible;
            decide_ms.push_back(t.decide_ms);
            find_ms.push_back(t.find_ms);
            synthesize_ms.push_back(t.synthesize_ms);
            validate_ms.push_back(t.validate_ms);
            total_ms.push_back(t.decide_ms + t.find_ms + t.synthesize_ms + t.validate_ms);
        }
        row.stream_count = count;
        row.switches = config.switches;
        row.profile = to_string(config.profile);
        row.decide_ms = median(decide_ms);
        row.find_ms = median(find_ms);
        row.synthesize_ms = median(synthesize_ms);
        row.validate_ms = median(validate_ms);
        row.total_ms = median(total_ms);
        rows.push_back(row);

        if (progress)
            (*progress) << "bench: " << count << " streams, n=" << config.switches << ", "
                        << (row.feasible ? "feasible" : "infeasible") << ", total "
                        << row.total_ms << " ms\n";
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "schema_version,stream_count,switches,profile,feasible,decide_ms,find_ms,"
           "synthesize_ms,validate_ms,total_ms\n";
    out.setf(std::ios::fixed);
    out.precision(3);
    for (const auto& r : rows) {
        out << 1 << ',' << r.stream_count << ',' << r.switches << ',' << r.profile << ','
            << (r.feasible ? "true" : "false") << ',' << r.decide_ms << ',' << r.find_ms << ','
            << r.synthesize_ms << ',' << r.validate_ms << ',' << r.total_ms << '\n';
    }
    return out.str();
}

}  // namespace chainsched
