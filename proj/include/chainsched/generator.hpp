#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chainsched/json_io.hpp"
#include "chainsched/model.hpp"

namespace chainsched {

// Random-instance specification. All randomness is derived from the seed;
// the same spec and seed always produce the identical instance.
struct GenSpec {
    enum class IntervalModel {
        uniform,  // endpoints uniform over ordered pairs src != dst
        hub,      // every stream has switch 1 as one endpoint, the other uniform
    };

    int switches = 8;
    int stream_count = 10;
    // (exponent, weight) pairs; periods are 2^exponent.
    std::vector<std::pair<int, int>> period_exponent_weights = {{0, 1}, {1, 1}, {2, 1}};
    IntervalModel interval_model = IntervalModel::uniform;
    std::uint64_t seed = 0;
    bool feasible_only = false;  // rejection-sample until decide() passes both directions
    int max_attempts = 100;
};

const char* to_string(GenSpec::IntervalModel m);

// Throws InputError when feasible_only exhausts max_attempts.
RawInstance generate(const GenSpec& spec);

// Deterministic 64-bit generator used everywhere randomness is needed.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    // Unbiased draw from [0, n).
    std::uint64_t below(std::uint64_t n);
    // Draw from [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

}  // namespace chainsched
