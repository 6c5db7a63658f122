#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainsched/model.hpp"
#include "chainsched/schedule.hpp"

namespace chainsched {

enum class ViolationKind { port_conflict, not_no_wait, window_violation, missing_replication };

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind = ViolationKind::port_conflict;
    std::vector<std::string> streams;
    std::int64_t replication = 0;
    int link = 0;          // normalized link index, 0 when not applicable
    std::int64_t slot = 0; // occupancy slot within the hyperperiod, 0 when not applicable
    std::int64_t layer = 0;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
};

// One replication's occupancy, one absolute slot per traversed link in link
// order. Wire schedules carry injection times only; the expansion derives
// slots from them and is therefore always no-wait. A hand-built expansion can
// carry arbitrary slots, which is what the no-wait audit exists to reject.
struct ExpandedReplication {
    std::uint32_t stream_ordinal = 0;
    std::int64_t replication = 1;
    std::int64_t injection_time = 1;
    std::vector<std::int64_t> slots;
};

struct ExpandedSchedule {
    std::int64_t hyperperiod = 1;
    std::vector<ExpandedReplication> replications;
};

// Derives per-link slots from injection times alone. Throws InputError when
// the schedule references unknown streams or disagrees with the instance on
// direction, switch count, or hyperperiod.
ExpandedSchedule expand(const Schedule& schedule, const Instance& instance);

// Audits an expansion against the instance: egress-port exclusivity over
// (link, slot mod hyperperiod), consecutive slots per replication, implied
// layers within replication windows, and exactly hyperperiod/period
// replications per stream. Never trusts any coloring artifact.
ValidationReport audit(const ExpandedSchedule& expanded, const Instance& instance);

ValidationReport validate(const Schedule& schedule, const Instance& instance);

}  // namespace chainsched
