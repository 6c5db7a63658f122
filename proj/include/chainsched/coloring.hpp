#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainsched/model.hpp"
#include "chainsched/partition.hpp"

namespace chainsched {

// Assignment of every replication of every stream to a layer of the
// hyperperiod parallelogram. layers is indexed by the stream's position in
// the instance; layers[ordinal][i-1] is the layer of replication i and lies
// in the window [(i-1)*p_s + 1, i*p_s].
//
// For colorings of a sub-instance (one half of a split), streams absent from
// the half have an empty layer vector.
struct GoodColoring {
    std::int64_t hyperperiod = 1;
    std::vector<std::vector<std::int32_t>> layers;

    bool empty() const {
        for (const auto& v : layers)
            if (!v.empty()) return false;
        return true;
    }
    std::int64_t entry_count() const {
        std::int64_t n = 0;
        for (const auto& v : layers) n += static_cast<std::int64_t>(v.size());
        return n;
    }
};

// Computes a good coloring for a feasible instance by recursive halving:
// split the top period class into two balanced groups, color each half at
// half the hyperperiod, and join the halves as the lower and upper layer
// blocks. Throws InputError if the instance is infeasible (the root-level
// capacity check fails) and InternalError if a deeper recursion level fails,
// which cannot happen on feasible input.
//
// With parallel=true the two recursive branches of the first few levels run
// concurrently; the result is identical either way.
GoodColoring find(const Instance& instance, bool parallel = false);

// Same recursion with an explicit level: the result is a good 2^k-coloring
// even when the instance's own hyperperiod is smaller. find(instance) equals
// find_at_level(instance, instance.k_star).
GoodColoring find_at_level(const Instance& instance, int k, bool parallel = false);

// The two half-instances induced by a split of the top period class: lower
// streams are shared, split streams keep their interval with period halved.
// Stream order (and therefore coloring ordinals) matches the parent instance.
std::pair<Instance, Instance> half_instances(const Instance& instance, const Bipartition& split);

// Joins good colorings of the two halves (each over hyperperiod p/2, indexed
// by the parent instance's ordinals) into a good coloring over hyperperiod p.
// Lower streams take their first half of replications from ca and the rest
// from cb shifted up by p/2; split streams take their single replication from
// the side they were assigned to. Missing entries signal a recursion bug and
// throw InternalError.
GoodColoring merge_colorings(const GoodColoring& ca, const GoodColoring& cb,
                             const Bipartition& split, const Instance& instance);

// Direct audit of the goodness definition: per-replication windows, exactly
// hyperperiod/period replications per stream, and properness checked by a
// per-layer occupancy sweep. Returns the first violation found, or nullopt.
// Independent of the construction in find().
std::optional<std::string> verify_good_coloring(const Instance& instance,
                                                const GoodColoring& coloring);

}  // namespace chainsched
