#pragma once

#include <cstdint>
#include <vector>

#include "chainsched/model.hpp"

namespace chainsched {

// Weighted per-link load at level k:
//   loads[l-1] = sum over i in [0, k] of 2^(k-i) * #{s with period 2^i covering link l}.
// At k = k_star this counts, per link, the replication vertices whose interval
// covers that link.
struct LoadProfile {
    int k = 0;
    std::vector<std::int64_t> loads;  // index l-1 holds the load on link l

    std::int64_t at(int link) const { return loads[static_cast<std::size_t>(link - 1)]; }
};

// Difference-array sweep, O(|S| + n).
LoadProfile load_profile(const Instance& instance, int k);

struct Feasibility {
    bool feasible = true;
    // Populated on infeasibility: leftmost violating link with its load.
    int witness_link = 0;
    std::int64_t load = 0;
    std::int64_t capacity = 0;
};

// A no-wait schedule exists iff the level-k_star load on every link is at
// most 2^k_star.
Feasibility decide(const Instance& instance);

}  // namespace chainsched
