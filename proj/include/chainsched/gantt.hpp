#pragma once

#include <string>

#include "chainsched/model.hpp"
#include "chainsched/schedule.hpp"

namespace chainsched {

enum class GanttFormat { text, svg };

// Draws one hyperperiod of the schedule, one row per egress port from the
// chain's first port down, one column per unit slot. Each replication shows
// as its stepdown sequence of bars. Output is byte-for-byte deterministic.
std::string render_gantt(const Schedule& schedule, const Instance& instance, GanttFormat format);

// Both directions stacked into one document.
std::string render_gantt(const Schedule& ltr, const Instance& instance_ltr, const Schedule& rtl,
                         const Instance& instance_rtl, GanttFormat format);

}  // namespace chainsched
