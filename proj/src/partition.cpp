#include "chainsched/partition.hpp"

#include <algorithm>
#include <map>

#include "chainsched/feasibility.hpp"

namespace chainsched {

namespace {

struct Edge {
    int u = 0;       // left coordinate
    int v = 0;       // right coordinate, u < v
    bool dummy = false;
};

}  // namespace

std::vector<int> balanced_bipartition(const std::vector<LinkInterval>& intervals) {
    std::vector<int> color(intervals.size(), 0);
    if (intervals.empty()) return color;

    // Coordinates are interval left endpoints and one-past-right endpoints.
    std::vector<Edge> edges;
    edges.reserve(intervals.size());
    std::map<int, int> degree;
    for (const auto& iv : intervals) {
        if (iv.first > iv.last) throw InputError("balanced_bipartition: empty interval");
        edges.push_back(Edge{iv.first, iv.last + 1, false});
        degree[iv.first]++;
        degree[iv.last + 1]++;
    }

    // Pair odd-degree coordinates in ascending order. The resulting dummy
    // edges are pairwise disjoint segments, so any link cut is crossed by at
    // most one of them.
    std::vector<int> odd;
    for (const auto& [coord, deg] : degree)
        if (deg % 2 == 1) odd.push_back(coord);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2)
        edges.push_back(Edge{odd[i], odd[i + 1], true});

    // Compressed adjacency, sorted by (neighbor, edge index) for determinism.
    std::vector<int> coords;
    coords.reserve(degree.size());
    for (const auto& [coord, deg] : degree) coords.push_back(coord);
    auto coord_index = [&](int c) {
        return static_cast<std::size_t>(
            std::lower_bound(coords.begin(), coords.end(), c) - coords.begin());
    };

    struct Arc {
        int neighbor;
        std::size_t edge;
    };
    std::vector<std::vector<Arc>> adj(coords.size());
    for (std::size_t e = 0; e < edges.size(); e++) {
        adj[coord_index(edges[e].u)].push_back(Arc{edges[e].v, e});
        adj[coord_index(edges[e].v)].push_back(Arc{edges[e].u, e});
    }
    for (auto& arcs : adj)
        std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
            return x.neighbor != y.neighbor ? x.neighbor < y.neighbor : x.edge < y.edge;
        });

    // Hierholzer over every component; all degrees are even after the dummy
    // repair, so each component yields a closed circuit.
    std::vector<bool> used(edges.size(), false);
    std::vector<std::size_t> next_arc(coords.size(), 0);
    for (std::size_t start = 0; start < coords.size(); start++) {
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            const std::size_t at = stack.back();
            auto& cursor = next_arc[at];
            while (cursor < adj[at].size() && used[adj[at][cursor].edge]) cursor++;
            if (cursor == adj[at].size()) {
                stack.pop_back();
                continue;
            }
            const Arc arc = adj[at][cursor];
            used[arc.edge] = true;
            const Edge& e = edges[arc.edge];
            if (!e.dummy) {
                const bool forward = coords[at] == e.u;
                color[arc.edge] = forward ? 0 : 1;
            }
            stack.push_back(coord_index(arc.neighbor));
        }
    }
    return color;
}

CapacityVector residual_capacities(const Instance& instance) {
    if (instance.k_star < 1)
        throw InputError("residual_capacities: requires k_star >= 1");
    const LoadProfile below = load_profile(instance, instance.k_star - 1);
    const std::int64_t half = std::int64_t{1} << (instance.k_star - 1);
    CapacityVector cap;
    cap.residual.reserve(below.loads.size());
    for (std::int64_t load : below.loads) cap.residual.push_back(half - load);
    return cap;
}

Bipartition split_top_level(const Instance& instance, const CapacityVector& capacities) {
    const int links = instance.topology.links();
    if (static_cast<int>(capacities.residual.size()) != links)
        throw InputError("split_top_level: capacity vector size mismatch");

    // Top period class, with deterministic tie-breaking.
    std::vector<const Stream*> top;
    for (const auto& s : instance.streams)
        if (s.period == instance.hyperperiod) top.push_back(&s);
    std::sort(top.begin(), top.end(), [](const Stream* x, const Stream* y) {
        if (x->a != y->a) return x->a < y->a;
        if (x->b != y->b) return x->b < y->b;
        return x->id < y->id;
    });

    std::vector<std::int64_t> coverage(static_cast<std::size_t>(links) + 1, 0);
    for (const Stream* s : top) {
        coverage[static_cast<std::size_t>(s->first_link() - 1)]++;
        coverage[static_cast<std::size_t>(s->last_link())]--;
    }
    std::int64_t running = 0;
    for (int l = 1; l <= links; l++) {
        running += coverage[static_cast<std::size_t>(l - 1)];
        if (capacities.at(l) < (running + 1) / 2)
            throw InputError("split_top_level: link " + std::to_string(l) +
                             " residual capacity " + std::to_string(capacities.at(l)) +
                             " below half of top coverage " + std::to_string(running));
    }

    std::vector<LinkInterval> intervals;
    intervals.reserve(top.size());
    for (const Stream* s : top) intervals.push_back(LinkInterval{s->first_link(), s->last_link()});
    const std::vector<int> color = balanced_bipartition(intervals);

    Bipartition split;
    std::vector<std::int64_t> count_a(static_cast<std::size_t>(links) + 2, 0);
    std::vector<std::int64_t> count_b(static_cast<std::size_t>(links) + 2, 0);
    for (std::size_t i = 0; i < top.size(); i++) {
        auto& counts = color[i] == 0 ? count_a : count_b;
        counts[static_cast<std::size_t>(top[i]->first_link() - 1)]++;
        counts[static_cast<std::size_t>(top[i]->last_link())]--;
        (color[i] == 0 ? split.group_a : split.group_b).push_back(top[i]->id);
    }

    std::int64_t run_a = 0, run_b = 0;
    for (int l = 1; l <= links; l++) {
        run_a += count_a[static_cast<std::size_t>(l - 1)];
        run_b += count_b[static_cast<std::size_t>(l - 1)];
        if (run_a > capacities.at(l) || run_b > capacities.at(l))
            throw InternalError("split_top_level: bipartition exceeds capacity at link " +
                                std::to_string(l));
    }
    return split;
}

}  // namespace chainsched
