#include "chainsched/coloring.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace chainsched {

namespace {

constexpr int kMaxLevel = 30;

struct ColorItem {
    std::uint32_t ordinal = 0;
    int a = 0;
    int b = 0;
    int kexp = 0;  // period is 2^kexp

    bool covers(int link) const { return a <= link && link < b; }
};

// Layer vectors parallel to a node's item list.
using NodeColoring = std::vector<std::vector<std::int32_t>>;

class FindContext {
public:
    FindContext(const Instance& instance, bool parallel)
        : instance_(instance), links_(instance.topology.links()), parallel_(parallel) {}

    NodeColoring run(std::vector<ColorItem> items, int k) { return find_level(std::move(items), k, 0); }

private:
    const Instance& instance_;
    int links_;
    bool parallel_;

    [[noreturn]] void fail(int depth, const std::string& what) const {
        if (depth == 0)
            throw InputError("find: instance is infeasible (" + what + ")");
        throw InternalError("find: capacity check failed below the root (" + what +
                            "); this indicates a construction bug");
    }

    NodeColoring find_level(std::vector<ColorItem> items, int k, int depth) {
        NodeColoring result(items.size());
        if (items.empty()) return result;

        if (k == 0) {
            // All periods are 1 here; feasibility at this level means no two
            // streams share a link, so every stream takes layer 1.
            std::vector<std::int32_t> occupancy(static_cast<std::size_t>(links_) + 1, 0);
            for (const auto& it : items) {
                occupancy[static_cast<std::size_t>(it.a - 1)]++;
                occupancy[static_cast<std::size_t>(it.b - 1)]--;
            }
            std::int32_t running = 0;
            for (int l = 1; l <= links_; l++) {
                running += occupancy[static_cast<std::size_t>(l - 1)];
                if (running > 1) fail(depth, "level-0 load exceeds 1 on link " + std::to_string(l));
            }
            for (std::size_t i = 0; i < items.size(); i++) result[i] = {1};
            return result;
        }

        const std::int64_t half = std::int64_t{1} << (k - 1);

        // Residual capacities against the lower classes.
        std::vector<std::int64_t> diff(static_cast<std::size_t>(links_) + 1, 0);
        std::vector<std::size_t> lower, top;
        for (std::size_t i = 0; i < items.size(); i++) {
            const auto& it = items[i];
            if (it.kexp == k) {
                top.push_back(i);
                continue;
            }
            lower.push_back(i);
            const std::int64_t weight = std::int64_t{1} << (k - 1 - it.kexp);
            diff[static_cast<std::size_t>(it.a - 1)] += weight;
            diff[static_cast<std::size_t>(it.b - 1)] -= weight;
        }
        std::vector<std::int64_t> residual(static_cast<std::size_t>(links_), 0);
        std::int64_t running = 0;
        for (int l = 0; l < links_; l++) {
            running += diff[static_cast<std::size_t>(l)];
            residual[static_cast<std::size_t>(l)] = half - running;
        }

        // Half of the top coverage must fit in the residual on every link.
        std::sort(top.begin(), top.end(), [&](std::size_t x, std::size_t y) {
            const auto& sx = items[x];
            const auto& sy = items[y];
            if (sx.a != sy.a) return sx.a < sy.a;
            if (sx.b != sy.b) return sx.b < sy.b;
            return instance_.streams[sx.ordinal].id < instance_.streams[sy.ordinal].id;
        });
        std::vector<std::int64_t> cover(static_cast<std::size_t>(links_) + 1, 0);
        for (std::size_t i : top) {
            cover[static_cast<std::size_t>(items[i].a - 1)]++;
            cover[static_cast<std::size_t>(items[i].b - 1)]--;
        }
        running = 0;
        for (int l = 0; l < links_; l++) {
            running += cover[static_cast<std::size_t>(l)];
            if (residual[static_cast<std::size_t>(l)] < (running + 1) / 2)
                fail(depth, "link " + std::to_string(l + 1) + " residual " +
                                std::to_string(residual[static_cast<std::size_t>(l)]) +
                                " cannot hold half of " + std::to_string(running));
        }

        std::vector<LinkInterval> intervals;
        intervals.reserve(top.size());
        for (std::size_t i : top) intervals.push_back(LinkInterval{items[i].a, items[i].b - 1});
        const std::vector<int> side = balanced_bipartition(intervals);

        // Children: shared lower items plus one re-labeled half of the top.
        std::vector<ColorItem> items_a, items_b;
        items_a.reserve(lower.size() + top.size());
        items_b.reserve(lower.size() + top.size());
        for (std::size_t i : lower) items_a.push_back(items[i]);
        items_b = items_a;
        std::vector<std::size_t> top_child_pos(items.size(), 0);
        for (std::size_t t = 0; t < top.size(); t++) {
            ColorItem relabeled = items[top[t]];
            relabeled.kexp = k - 1;
            if (side[t] == 0) {
                top_child_pos[top[t]] = items_a.size();
                items_a.push_back(relabeled);
            } else {
                top_child_pos[top[t]] = items_b.size();
                items_b.push_back(relabeled);
            }
        }

        NodeColoring col_a, col_b;
        if (parallel_ && depth < 3 && !items_a.empty() && !items_b.empty()) {
            auto fut = std::async(std::launch::async, [&] {
                return find_level(std::move(items_a), k - 1, depth + 1);
            });
            col_b = find_level(std::move(items_b), k - 1, depth + 1);
            col_a = fut.get();
        } else {
            col_a = find_level(std::move(items_a), k - 1, depth + 1);
            col_b = find_level(std::move(items_b), k - 1, depth + 1);
        }

        // Join: lower streams take the a-half layers then the b-half layers
        // shifted by 2^(k-1); split streams take their assigned side.
        for (std::size_t li = 0; li < lower.size(); li++) {
            const std::size_t p = lower[li];
            const std::int64_t reps_half = half >> items[p].kexp;
            auto& dst = result[p];
            dst.resize(static_cast<std::size_t>(2 * reps_half));
            for (std::int64_t j = 0; j < reps_half; j++) {
                dst[static_cast<std::size_t>(j)] = col_a[li][static_cast<std::size_t>(j)];
                dst[static_cast<std::size_t>(reps_half + j)] =
                    col_b[li][static_cast<std::size_t>(j)] + static_cast<std::int32_t>(half);
            }
        }
        for (std::size_t t = 0; t < top.size(); t++) {
            const std::size_t p = top[t];
            if (side[t] == 0)
                result[p] = {col_a[top_child_pos[p]][0]};
            else
                result[p] = {static_cast<std::int32_t>(col_b[top_child_pos[p]][0] + half)};
        }
        return result;
    }
};

int exponent_of(std::int64_t period) {
    int k = 0;
    while ((std::int64_t{1} << k) < period) k++;
    return k;
}

}  // namespace

GoodColoring find_at_level(const Instance& instance, int k, bool parallel) {
    if (k < instance.k_star)
        throw InputError("find_at_level: level below the instance's k_star");
    if (k > kMaxLevel)
        throw InputError("find_at_level: hyperperiod 2^" + std::to_string(k) + " unsupported");

    std::vector<ColorItem> items;
    items.reserve(instance.streams.size());
    for (std::uint32_t i = 0; i < instance.streams.size(); i++) {
        const auto& s = instance.streams[i];
        items.push_back(ColorItem{i, s.a, s.b, exponent_of(s.period)});
    }

    FindContext ctx(instance, parallel);
    NodeColoring node = ctx.run(std::move(items), k);

    GoodColoring coloring;
    coloring.hyperperiod = std::int64_t{1} << k;
    coloring.layers.resize(instance.streams.size());
    for (std::size_t i = 0; i < node.size(); i++) coloring.layers[i] = std::move(node[i]);
    return coloring;
}

GoodColoring find(const Instance& instance, bool parallel) {
    return find_at_level(instance, instance.k_star, parallel);
}

std::pair<Instance, Instance> half_instances(const Instance& instance, const Bipartition& split) {
    if (instance.k_star < 1)
        throw InputError("half_instances: instance hyperperiod is already 1");
    std::unordered_set<std::string> in_a(split.group_a.begin(), split.group_a.end());
    std::unordered_set<std::string> in_b(split.group_b.begin(), split.group_b.end());

    std::vector<Stream> streams_a, streams_b;
    for (const auto& s : instance.streams) {
        if (s.period == instance.hyperperiod) {
            Stream relabeled = s;
            relabeled.period = s.period / 2;
            if (in_a.count(s.id))
                streams_a.push_back(std::move(relabeled));
            else if (in_b.count(s.id))
                streams_b.push_back(std::move(relabeled));
            else
                throw InputError("half_instances: top stream '" + s.id + "' missing from split");
        } else {
            streams_a.push_back(s);
            streams_b.push_back(s);
        }
    }
    return {make_instance(instance.topology, std::move(streams_a), instance.direction),
            make_instance(instance.topology, std::move(streams_b), instance.direction)};
}

GoodColoring merge_colorings(const GoodColoring& ca, const GoodColoring& cb,
                             const Bipartition& split, const Instance& instance) {
    const std::int64_t half = instance.hyperperiod / 2;
    if (instance.k_star < 1)
        throw InputError("merge_colorings: nothing to merge at hyperperiod 1");
    if (ca.layers.size() != instance.streams.size() || cb.layers.size() != instance.streams.size())
        throw InternalError("merge_colorings: half colorings not indexed by the instance");

    std::unordered_set<std::string> in_a(split.group_a.begin(), split.group_a.end());
    std::unordered_set<std::string> in_b(split.group_b.begin(), split.group_b.end());

    GoodColoring merged;
    merged.hyperperiod = instance.hyperperiod;
    merged.layers.resize(instance.streams.size());
    for (std::size_t i = 0; i < instance.streams.size(); i++) {
        const auto& s = instance.streams[i];
        auto& dst = merged.layers[i];
        if (s.period == instance.hyperperiod) {
            const bool a_side = in_a.count(s.id) > 0;
            if (!a_side && !in_b.count(s.id))
                throw InternalError("merge_colorings: top stream '" + s.id + "' not in split");
            const auto& src = a_side ? ca.layers[i] : cb.layers[i];
            if (src.size() != 1)
                throw InternalError("merge_colorings: missing entry for top stream '" + s.id + "'");
            dst = {a_side ? src[0] : static_cast<std::int32_t>(src[0] + half)};
        } else {
            const std::size_t reps_half = static_cast<std::size_t>(half / s.period);
            if (ca.layers[i].size() != reps_half || cb.layers[i].size() != reps_half)
                throw InternalError("merge_colorings: missing entries for stream '" + s.id + "'");
            dst.resize(2 * reps_half);
            for (std::size_t j = 0; j < reps_half; j++) {
                dst[j] = ca.layers[i][j];
                dst[reps_half + j] = static_cast<std::int32_t>(cb.layers[i][j] + half);
            }
        }
    }
    return merged;
}

std::optional<std::string> verify_good_coloring(const Instance& instance,
                                                const GoodColoring& coloring) {
    if (coloring.hyperperiod != instance.hyperperiod)
        return "hyperperiod mismatch: coloring " + std::to_string(coloring.hyperperiod) +
               " vs instance " + std::to_string(instance.hyperperiod);
    if (coloring.layers.size() != instance.streams.size())
        return "coloring has " + std::to_string(coloring.layers.size()) + " streams, instance has " +
               std::to_string(instance.streams.size());

    for (std::size_t i = 0; i < instance.streams.size(); i++) {
        const auto& s = instance.streams[i];
        const auto& layers = coloring.layers[i];
        const std::int64_t reps = instance.hyperperiod / s.period;
        if (static_cast<std::int64_t>(layers.size()) != reps)
            return "stream '" + s.id + "': " + std::to_string(layers.size()) +
                   " replications, expected " + std::to_string(reps);
        for (std::int64_t r = 0; r < reps; r++) {
            const std::int64_t layer = layers[static_cast<std::size_t>(r)];
            const std::int64_t lo = r * s.period + 1;
            const std::int64_t hi = (r + 1) * s.period;
            if (layer < lo || layer > hi)
                return "stream '" + s.id + "' replication " + std::to_string(r + 1) + ": layer " +
                       std::to_string(layer) + " outside window [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]";
        }
    }

    // Properness: within each layer, per-link occupancy must not exceed 1.
    // Sweep with a map keyed by (layer, link) start/stop events.
    std::map<std::pair<std::int64_t, int>, int> events;
    for (std::size_t i = 0; i < instance.streams.size(); i++) {
        const auto& s = instance.streams[i];
        for (std::int32_t layer : coloring.layers[i]) {
            events[{layer, s.first_link()}]++;
            events[{layer, s.last_link() + 1}]--;
        }
    }
    std::int64_t current_layer = -1;
    int running = 0;
    for (const auto& [key, delta] : events) {
        if (key.first != current_layer) {
            current_layer = key.first;
            running = 0;
        }
        running += delta;
        if (running > 1)
            return "layer " + std::to_string(key.first) + " doubly occupied on link " +
                   std::to_string(key.second);
    }
    return std::nullopt;
}

}  // namespace chainsched
