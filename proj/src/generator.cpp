#include "chainsched/generator.hpp"

#include "chainsched/feasibility.hpp"

namespace chainsched {

const char* to_string(GenSpec::IntervalModel m) {
    return m == GenSpec::IntervalModel::uniform ? "uniform" : "hub";
}

// splitmix64; small state, solid distribution, bit-identical everywhere.
Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw InternalError("Rng::below(0)");
    // Rejection on the top range to avoid modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t v;
    do {
        v = next();
    } while (v > limit);
    return v % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

std::string stream_id(int index, int total) {
    int width = 1;
    for (int v = total; v >= 10; v /= 10) width++;
    std::string digits = std::to_string(index);
    return "f" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
}

RawInstance generate_once(const GenSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    const int n = spec.switches;

    std::int64_t total_weight = 0;
    for (const auto& [exp, weight] : spec.period_exponent_weights) {
        if (exp < 0 || exp > 30) throw InputError("generate: period exponent out of [0, 30]");
        if (weight < 0) throw InputError("generate: negative period weight");
        total_weight += weight;
    }
    if (total_weight <= 0) throw InputError("generate: period weights sum to zero");

    RawInstance raw;
    raw.topology.switches = n;
    raw.streams.reserve(static_cast<std::size_t>(spec.stream_count));
    for (int i = 0; i < spec.stream_count; i++) {
        RawStream s;
        s.id = stream_id(i + 1, spec.stream_count);

        if (spec.interval_model == GenSpec::IntervalModel::hub) {
            const int other = static_cast<int>(rng.range(2, n));
            if (rng.below(2) == 0) {
                s.src_switch = 1;
                s.dst_switch = other;
            } else {
                s.src_switch = other;
                s.dst_switch = 1;
            }
        } else {
            s.src_switch = static_cast<int>(rng.range(1, n));
            int dst = static_cast<int>(rng.range(1, n - 1));
            if (dst >= s.src_switch) dst++;
            s.dst_switch = dst;
        }

        std::int64_t pick = rng.range(0, total_weight - 1);
        for (const auto& [exp, weight] : spec.period_exponent_weights) {
            if (pick < weight) {
                s.period = std::int64_t{1} << exp;
                break;
            }
            pick -= weight;
        }
        raw.streams.push_back(std::move(s));
    }
    return raw;
}

}  // namespace

RawInstance generate(const GenSpec& spec) {
    if (spec.switches < 2) throw InputError("generate: need at least 2 switches");
    if (spec.stream_count < 0) throw InputError("generate: negative stream count");

    const int attempts = spec.feasible_only ? spec.max_attempts : 1;
    for (int attempt = 0; attempt < attempts; attempt++) {
        // Each attempt draws from an independent stream of the same seed.
        RawInstance raw = generate_once(
            spec, spec.seed + 0x51ed2701a1b2c3d4ull * static_cast<std::uint64_t>(attempt));
        if (!spec.feasible_only) return raw;
        NormalizedInstances norm = normalize(raw.topology, raw.streams, PeriodPolicy::reject);
        if (decide(norm.left_to_right).feasible && decide(norm.right_to_left).feasible)
            return raw;
    }
    throw InputError("generate: no feasible instance after " + std::to_string(spec.max_attempts) +
                     " attempts; lower the stream count or spread the load");
}

}  // namespace chainsched
