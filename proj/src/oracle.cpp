#include "chainsched/oracle.hpp"

#include <algorithm>
#include <vector>

namespace chainsched {

const char* to_string(OracleResult::Outcome o) {
    switch (o) {
        case OracleResult::Outcome::found: return "found";
        case OracleResult::Outcome::exhausted_infeasible: return "exhausted-infeasible";
        case OracleResult::Outcome::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

struct Vertex {
    std::uint32_t ordinal = 0;
    std::int64_t replication = 1;
};

class Search {
public:
    Search(const Instance& instance, std::uint64_t budget)
        : instance_(instance), budget_(budget), p_(instance.hyperperiod) {
        // Fixed search order: stream id, then replication index.
        std::vector<std::uint32_t> by_id(instance.streams.size());
        for (std::uint32_t i = 0; i < by_id.size(); i++) by_id[i] = i;
        std::sort(by_id.begin(), by_id.end(), [&](std::uint32_t x, std::uint32_t y) {
            return instance.streams[x].id < instance.streams[y].id;
        });
        for (std::uint32_t ord : by_id)
            for (std::int64_t r = 1; r <= p_ / instance.streams[ord].period; r++)
                vertices_.push_back(Vertex{ord, r});
        occupied_.assign(static_cast<std::size_t>(instance.topology.links()) *
                             static_cast<std::size_t>(p_),
                         false);
        assigned_.assign(vertices_.size(), 0);
    }

    OracleResult run() {
        OracleResult result;
        const bool complete = place(0, result);
        result.nodes_explored = nodes_;
        if (!complete) {
            result.outcome = OracleResult::Outcome::budget_exceeded;
            return result;
        }
        if (!found_) {
            result.outcome = OracleResult::Outcome::exhausted_infeasible;
            return result;
        }
        result.outcome = OracleResult::Outcome::found;
        GoodColoring coloring;
        coloring.hyperperiod = p_;
        coloring.layers.resize(instance_.streams.size());
        for (std::size_t i = 0; i < instance_.streams.size(); i++)
            coloring.layers[i].resize(
                static_cast<std::size_t>(p_ / instance_.streams[i].period));
        for (std::size_t v = 0; v < vertices_.size(); v++)
            coloring.layers[vertices_[v].ordinal][static_cast<std::size_t>(
                vertices_[v].replication - 1)] = static_cast<std::int32_t>(assigned_[v]);
        result.coloring = std::move(coloring);
        return result;
    }

private:
    const Instance& instance_;
    std::uint64_t budget_;
    std::int64_t p_;
    std::vector<Vertex> vertices_;
    std::vector<bool> occupied_;  // (link-1) * p + (layer-1)
    std::vector<std::int64_t> assigned_;
    std::uint64_t nodes_ = 0;
    bool found_ = false;

    bool cells_free(const Stream& s, std::int64_t layer) const {
        for (int l = s.first_link(); l <= s.last_link(); l++)
            if (occupied_[static_cast<std::size_t>(l - 1) * static_cast<std::size_t>(p_) +
                          static_cast<std::size_t>(layer - 1)])
                return false;
        return true;
    }

    void mark(const Stream& s, std::int64_t layer, bool value) {
        for (int l = s.first_link(); l <= s.last_link(); l++)
            occupied_[static_cast<std::size_t>(l - 1) * static_cast<std::size_t>(p_) +
                      static_cast<std::size_t>(layer - 1)] = value;
    }

    // Returns false when the node budget ran out; found_ records success.
    bool place(std::size_t at, OracleResult& result) {
        if (at == vertices_.size()) {
            found_ = true;
            return true;
        }
        const Vertex v = vertices_[at];
        const Stream& s = instance_.streams[v.ordinal];
        const std::int64_t lo = (v.replication - 1) * s.period + 1;
        const std::int64_t hi = v.replication * s.period;
        for (std::int64_t layer = lo; layer <= hi; layer++) {
            if (++nodes_ > budget_) return false;
            if (!cells_free(s, layer)) continue;
            mark(s, layer, true);
            assigned_[at] = layer;
            if (!place(at + 1, result)) return false;
            if (found_) return true;
            mark(s, layer, false);
        }
        return true;
    }
};

}  // namespace

OracleResult brute_force(const Instance& instance, std::uint64_t node_budget) {
    if (node_budget == 0) throw InputError("brute_force: node budget must be positive");
    return Search(instance, node_budget).run();
}

}  // namespace chainsched
