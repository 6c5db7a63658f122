#pragma once

#include <cstdint>
#include <optional>

#include "chainsched/coloring.hpp"
#include "chainsched/model.hpp"

namespace chainsched {

struct OracleResult {
    enum class Outcome { found, exhausted_infeasible, budget_exceeded };

    Outcome outcome = Outcome::exhausted_infeasible;
    std::optional<GoodColoring> coloring;  // set iff outcome == found
    std::uint64_t nodes_explored = 0;
};

const char* to_string(OracleResult::Outcome o);

// Exhaustive backtracking search for a good coloring. Replication vertices
// are ordered by (stream id, replication index) and layers are tried in
// ascending order within each window, pruning on per-link per-layer
// occupancy. Returns the first coloring found, a proof of infeasibility when
// the whole tree is refuted, or budget_exceeded once more than node_budget
// placements have been attempted. Exponential; for small instances only.
OracleResult brute_force(const Instance& instance, std::uint64_t node_budget = 10'000'000);

}  // namespace chainsched
