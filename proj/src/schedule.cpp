#include "chainsched/schedule.hpp"

namespace chainsched {

namespace {

constexpr int kQueuesPerPort = 8;

GclPort all_open_port(PortId id, std::int64_t hyperperiod) {
    GclPort port;
    port.port = id;
    port.hyperperiod = hyperperiod;
    port.entries.push_back(GclEntry{0, hyperperiod, std::string(kQueuesPerPort, '1')});
    return port;
}

}  // namespace

Schedule synthesize(const GoodColoring& coloring, const Instance& instance) {
    if (auto violation = verify_good_coloring(instance, coloring))
        throw InputError("synthesize: coloring is not good: " + *violation);

    Schedule schedule;
    schedule.direction = instance.direction;
    schedule.switches = instance.topology.switches;
    schedule.hyperperiod = coloring.hyperperiod;
    for (std::size_t i = 0; i < instance.streams.size(); i++) {
        const auto& s = instance.streams[i];
        const auto& layers = coloring.layers[i];
        for (std::size_t r = 0; r < layers.size(); r++) {
            schedule.entries.push_back(ScheduleEntry{
                s.id, static_cast<std::int64_t>(r + 1), layers[r] + s.a - 1});
        }
    }
    return schedule;
}

PortId port_for_link(int link, int switches, Direction direction) {
    if (direction == Direction::left_to_right) return PortId{link, link + 1};
    // Mirrored link l connects mirrored switches l and l+1, which are the
    // original switches n+1-l and n-l.
    return PortId{mirror_switch(switches, link), mirror_switch(switches, link + 1)};
}

GclTable emit_gcl(const Schedule& schedule) {
    GclTable table;
    table.switches = schedule.switches;
    for (int link = 1; link < schedule.switches; link++)
        table.ports.push_back(all_open_port(
            port_for_link(link, schedule.switches, Direction::left_to_right),
            schedule.hyperperiod));
    for (int link = 1; link < schedule.switches; link++)
        table.ports.push_back(all_open_port(
            port_for_link(link, schedule.switches, Direction::right_to_left),
            schedule.hyperperiod));
    return table;
}

GclTable emit_gcl(const Schedule& ltr, const Schedule& rtl) {
    if (ltr.switches != rtl.switches)
        throw InputError("emit_gcl: schedules disagree on the switch count");
    GclTable table;
    table.switches = ltr.switches;
    for (int link = 1; link < table.switches; link++)
        table.ports.push_back(all_open_port(
            port_for_link(link, table.switches, Direction::left_to_right), ltr.hyperperiod));
    for (int link = 1; link < table.switches; link++)
        table.ports.push_back(all_open_port(
            port_for_link(link, table.switches, Direction::right_to_left), rtl.hyperperiod));
    return table;
}

}  // namespace chainsched
