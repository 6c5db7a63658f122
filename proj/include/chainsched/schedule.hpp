#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainsched/coloring.hpp"
#include "chainsched/model.hpp"

namespace chainsched {

struct ScheduleEntry {
    std::string stream_id;
    std::int64_t replication = 1;    // 1-based, in [1, hyperperiod/period]
    std::int64_t injection_time = 1; // slot the source emits at, in [a_s, p + a_s - 1]
};

// A no-wait schedule for one direction. The occupancy is fully determined by
// the injection times: replication injected at t occupies link l at slot
// t + (l - a_s), reduced modulo the hyperperiod; slots on consecutive links
// are consecutive, which is the no-wait property.
struct Schedule {
    Direction direction = Direction::left_to_right;
    int switches = 2;
    std::int64_t hyperperiod = 1;
    std::vector<ScheduleEntry> entries;  // ordered by (stream ordinal, replication)
};

// Injection time of replication i is C(v_s^i) + a_s - 1. Layer 1 of link 1 is
// slot 1; all times are relative to the hyperperiod epoch.
Schedule synthesize(const GoodColoring& coloring, const Instance& instance);

// An egress port of the chain, identified by the two switches it connects.
struct PortId {
    int from = 0;
    int to = 0;

    Direction direction() const {
        return from < to ? Direction::left_to_right : Direction::right_to_left;
    }
    std::string label() const {
        return "P_{" + std::to_string(from) + "," + std::to_string(to) + "}";
    }
};

// The egress port a normalized link maps to. For mirrored (right-to-left)
// instances this restores the original switch indices.
PortId port_for_link(int link, int switches, Direction direction);

struct GclEntry {
    std::int64_t start = 0;  // inclusive
    std::int64_t end = 0;    // exclusive
    std::string gates;       // one bit per queue, '1' = open
};

struct GclPort {
    PortId port;
    std::int64_t hyperperiod = 1;
    std::vector<GclEntry> entries;  // tile [0, hyperperiod) without overlap
};

struct GclTable {
    int switches = 2;
    std::vector<GclPort> ports;
};

// No-wait schedules deploy with every gate open for the whole hyperperiod:
// one all-open entry per egress port, for all ports of both directions.
GclTable emit_gcl(const Schedule& schedule);

// One table for a full deployment: each port keeps its own direction's
// hyperperiod.
GclTable emit_gcl(const Schedule& ltr, const Schedule& rtl);

}  // namespace chainsched
