#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainsched/model.hpp"

namespace chainsched {

// A contiguous run of links, both endpoints inclusive.
struct LinkInterval {
    int first = 0;
    int last = 0;
};

// Two-colors the intervals so that at every link the coverage counts of the
// two color classes differ by at most 1. Returns one entry per interval:
// 0 for class a, 1 for class b.
//
// Construction: each interval [a, b] becomes an undirected edge a -- b+1 on
// endpoint coordinates; consecutive odd-degree coordinates are paired with
// dummy edges (each crossing any link cut at most once); Eulerian circuits
// are peeled off starting from the smallest coordinate with edges scanned in
// sorted order. An edge traversed from its left endpoint gets class a, from
// its right endpoint class b. Any closed circuit crosses every cut equally
// often in both directions, so the per-cut class difference is bounded by the
// single possible dummy crossing.
std::vector<int> balanced_bipartition(const std::vector<LinkInterval>& intervals);

// Residual per-link capacities for splitting the top period class:
//   residual[l-1] = 2^(k_star-1) - c_{k_star-1, l}.
// Values may be negative when the enclosing instance is infeasible.
struct CapacityVector {
    std::vector<std::int64_t> residual;

    std::int64_t at(int link) const { return residual[static_cast<std::size_t>(link - 1)]; }
};

CapacityVector residual_capacities(const Instance& instance);

struct Bipartition {
    std::vector<std::string> group_a;
    std::vector<std::string> group_b;
};

// Splits the streams of period 2^k_star into two groups such that each group
// covers every link l at most residual[l] times. Requires, for every link,
// residual >= ceil(top_coverage / 2); throws InputError otherwise. The result
// is re-checked against the capacities and an InternalError signals a
// construction bug.
Bipartition split_top_level(const Instance& instance, const CapacityVector& capacities);

}  // namespace chainsched
