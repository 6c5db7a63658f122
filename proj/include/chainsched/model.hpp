#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainsched/errors.hpp"

namespace chainsched {

// A daisy chain of n switches. Link l in [1, n-1] connects switch l to
// switch l+1; in the left-to-right direction link l is the egress port
// P_{l,l+1}, in the right-to-left direction it is P_{l+1,l}.
struct Topology {
    int switches = 2;

    int links() const { return switches - 1; }
};

enum class Direction { left_to_right, right_to_left };

const char* to_string(Direction d);
std::optional<Direction> direction_from_string(const std::string& s);

// A stream as ingested: endpoints may be in either order, period arbitrary.
struct RawStream {
    std::string id;
    int src_switch = 0;
    int dst_switch = 0;
    std::int64_t period = 0;
    std::string extra_json;  // unknown fields, preserved verbatim
};

// A normalized stream: attach switches a < b, period an exact power of two.
// Right-to-left streams are mirrored (switch i -> n+1-i) so that all machinery
// operates left-to-right; `direction` records how to undo the mirroring.
struct Stream {
    std::string id;
    int a = 0;
    int b = 0;
    std::int64_t period = 1;
    Direction direction = Direction::left_to_right;
    std::string extra_json;

    // Links traversed: the interval [a, b-1].
    int first_link() const { return a; }
    int last_link() const { return b - 1; }
    bool covers(int link) const { return a <= link && link < b; }
    int span() const { return b - a; }
};

struct Instance {
    Topology topology;
    std::vector<Stream> streams;
    Direction direction = Direction::left_to_right;
    std::int64_t hyperperiod = 1;  // max period; equals LCM for powers of two
    int k_star = 0;                // log2(hyperperiod)
    std::string extra_json;        // unknown top-level instance fields

    std::int64_t replications(const Stream& s) const { return hyperperiod / s.period; }
};

enum class PeriodPolicy { reject, round_down, round_nearest };

const char* to_string(PeriodPolicy p);

// Largest power of two <= p. Requires p >= 1.
std::int64_t round_period_down(std::int64_t p);

// Geometric rounding: p in [2^k, 2^(k+1)) rounds up iff p > sqrt(2)*2^k,
// i.e. iff p*p > 2^(2k+1). Keeps every period within factor sqrt(2).
std::int64_t round_period_nearest(std::int64_t p);

// Max period, or 1 for an empty set. Periods must be powers of two.
std::int64_t hyperperiod(const std::vector<Stream>& streams);

bool is_power_of_two(std::int64_t p);

// Mirrors a switch index across the chain midpoint.
inline int mirror_switch(int n, int i) { return n + 1 - i; }

// Recover the original endpoints of a normalized stream.
int original_src(const Stream& s, const Topology& topo);
int original_dst(const Stream& s, const Topology& topo);

struct NormalizedInstances {
    Instance left_to_right;
    Instance right_to_left;
};

// Splits raw streams by direction, mirrors the right-to-left group so both
// instances use identical left-to-right machinery, and applies the period
// policy. Throws InputError on invalid streams or, under PeriodPolicy::reject,
// on non-power-of-two periods.
NormalizedInstances normalize(const Topology& topology, const std::vector<RawStream>& raw,
                              PeriodPolicy policy = PeriodPolicy::round_down);

// Builds a single-direction instance from already-normalized streams.
// Validates all Stream and Instance invariants.
Instance make_instance(const Topology& topology, std::vector<Stream> streams,
                       Direction direction = Direction::left_to_right);

}  // namespace chainsched
