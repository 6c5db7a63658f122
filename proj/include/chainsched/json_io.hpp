#pragma once

#include <string>
#include <vector>

#include "chainsched/coloring.hpp"
#include "chainsched/model.hpp"
#include "chainsched/schedule.hpp"
#include "chainsched/validator.hpp"

namespace chainsched {

constexpr int kFormatVersion = 1;

// An instance as it appears on the wire: topology plus raw streams, before
// direction split and period normalization. Unknown fields are preserved at
// both the top level and per stream and survive a save round trip.
struct RawInstance {
    Topology topology;
    std::vector<RawStream> streams;
    std::string extra_json;
};

// Throws InputError with a line:column position on malformed JSON and a named
// field on schema violations.
RawInstance parse_instance_json(const std::string& text);
RawInstance load_instance_file(const std::string& path);
std::string instance_to_json(const RawInstance& raw);

// Both directions of a synthesized deployment in one document.
struct ScheduleDocument {
    int switches = 2;
    Schedule ltr;
    Schedule rtl;
    std::string metadata_json;  // instance-level unknown fields, echoed
};

std::string schedule_to_json(const ScheduleDocument& doc);
ScheduleDocument parse_schedule_json(const std::string& text);
ScheduleDocument load_schedule_file(const std::string& path);

// Flat map "streamId#i" -> layer covering both directions.
std::string coloring_to_json(const Instance& ltr, const GoodColoring& coloring_ltr,
                             const Instance& rtl, const GoodColoring& coloring_rtl);

std::string report_to_json(const ValidationReport& ltr, const ValidationReport& rtl);

std::string gcl_to_json(const GclTable& table);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace chainsched
