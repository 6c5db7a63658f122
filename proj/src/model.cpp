#include "chainsched/model.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace chainsched {

const char* to_string(Direction d) {
    return d == Direction::left_to_right ? "ltr" : "rtl";
}

std::optional<Direction> direction_from_string(const std::string& s) {
    if (s == "ltr") return Direction::left_to_right;
    if (s == "rtl") return Direction::right_to_left;
    return std::nullopt;
}

const char* to_string(PeriodPolicy p) {
    switch (p) {
        case PeriodPolicy::reject: return "reject";
        case PeriodPolicy::round_down: return "round_down";
        case PeriodPolicy::round_nearest: return "round_nearest";
    }
    return "?";
}

bool is_power_of_two(std::int64_t p) {
    return p > 0 && (p & (p - 1)) == 0;
}

std::int64_t round_period_down(std::int64_t p) {
    if (p < 1) throw InputError("period must be positive");
    std::int64_t r = 1;
    while (r <= p / 2) r *= 2;
    return r;
}

std::int64_t round_period_nearest(std::int64_t p) {
    std::int64_t lo = round_period_down(p);
    if (lo == p) return p;
    // Compare p against the geometric mean sqrt(lo * 2*lo) without floats.
    return (p * p > 2 * lo * lo) ? 2 * lo : lo;
}

std::int64_t hyperperiod(const std::vector<Stream>& streams) {
    std::int64_t h = 1;
    for (const auto& s : streams) {
        if (!is_power_of_two(s.period))
            throw InputError("hyperperiod: period of stream '" + s.id +
                             "' is not a power of two");
        h = std::max(h, s.period);
    }
    return h;
}

int original_src(const Stream& s, const Topology& topo) {
    return s.direction == Direction::left_to_right ? s.a : mirror_switch(topo.switches, s.a);
}

int original_dst(const Stream& s, const Topology& topo) {
    return s.direction == Direction::left_to_right ? s.b : mirror_switch(topo.switches, s.b);
}

namespace {

std::int64_t apply_policy(const RawStream& r, PeriodPolicy policy) {
    if (r.period < 1) throw InputError("stream '" + r.id + "': period must be positive");
    if (is_power_of_two(r.period)) return r.period;
    switch (policy) {
        case PeriodPolicy::reject:
            throw InputError("stream '" + r.id + "': period " + std::to_string(r.period) +
                             " is not a power of two (policy reject)");
        case PeriodPolicy::round_down:
            return round_period_down(r.period);
        case PeriodPolicy::round_nearest:
            return round_period_nearest(r.period);
    }
    throw InternalError("unreachable period policy");
}

}  // namespace

Instance make_instance(const Topology& topology, std::vector<Stream> streams,
                       Direction direction) {
    if (topology.switches < 2) throw InputError("topology must have at least 2 switches");
    for (const auto& s : streams) {
        if (!(s.a < s.b)) throw InputError("stream '" + s.id + "': requires a < b");
        if (s.a < 1 || s.b > topology.switches)
            throw InputError("stream '" + s.id + "': attach switch out of range [1, " +
                             std::to_string(topology.switches) + "]");
        if (!is_power_of_two(s.period))
            throw InputError("stream '" + s.id + "': period is not a power of two");
        if (s.direction != direction)
            throw InputError("stream '" + s.id + "': direction differs from instance direction");
    }
    Instance inst;
    inst.topology = topology;
    inst.streams = std::move(streams);
    inst.direction = direction;
    inst.hyperperiod = hyperperiod(inst.streams);
    inst.k_star = 0;
    while ((std::int64_t{1} << inst.k_star) < inst.hyperperiod) inst.k_star++;
    return inst;
}

NormalizedInstances normalize(const Topology& topology, const std::vector<RawStream>& raw,
                              PeriodPolicy policy) {
    if (topology.switches < 2) throw InputError("topology must have at least 2 switches");
    const int n = topology.switches;

    std::unordered_set<std::string> seen;
    std::vector<Stream> ltr, rtl;
    for (const auto& r : raw) {
        if (r.id.empty()) throw InputError("stream with empty id");
        if (!seen.insert(r.id).second) throw InputError("duplicate stream id '" + r.id + "'");
        if (r.src_switch < 1 || r.src_switch > n)
            throw InputError("stream '" + r.id + "': src_switch " +
                             std::to_string(r.src_switch) + " out of range [1, " +
                             std::to_string(n) + "]");
        if (r.dst_switch < 1 || r.dst_switch > n)
            throw InputError("stream '" + r.id + "': dst_switch " +
                             std::to_string(r.dst_switch) + " out of range [1, " +
                             std::to_string(n) + "]");
        if (r.src_switch == r.dst_switch)
            throw InputError("stream '" + r.id + "': src_switch equals dst_switch");

        Stream s;
        s.id = r.id;
        s.period = apply_policy(r, policy);
        s.extra_json = r.extra_json;
        if (r.src_switch < r.dst_switch) {
            s.a = r.src_switch;
            s.b = r.dst_switch;
            s.direction = Direction::left_to_right;
            ltr.push_back(std::move(s));
        } else {
            s.a = mirror_switch(n, r.src_switch);
            s.b = mirror_switch(n, r.dst_switch);
            s.direction = Direction::right_to_left;
            rtl.push_back(std::move(s));
        }
    }

    NormalizedInstances out;
    out.left_to_right = make_instance(topology, std::move(ltr), Direction::left_to_right);
    out.right_to_left = make_instance(topology, std::move(rtl), Direction::right_to_left);
    return out;
}

}  // namespace chainsched
