#include "chainsched/gantt.hpp"

#include <sstream>
#include <unordered_map>
#include <vector>

#include "chainsched/validator.hpp"

namespace chainsched {

namespace {

// Occupant stream index per (link, slot) cell, -1 for idle. Conflicting
// schedules keep the first writer; rendering is a debugging view, not a
// validity check.
std::vector<std::vector<std::int64_t>> occupancy_grid(const Schedule& schedule,
                                                      const Instance& instance) {
    const int links = instance.topology.links();
    const std::int64_t p = schedule.hyperperiod;
    std::vector<std::vector<std::int64_t>> grid(
        static_cast<std::size_t>(links),
        std::vector<std::int64_t>(static_cast<std::size_t>(p), -1));

    std::unordered_map<std::string, std::int64_t> ordinal;
    for (std::size_t i = 0; i < instance.streams.size(); i++)
        ordinal[instance.streams[i].id] = static_cast<std::int64_t>(i);

    for (const auto& entry : schedule.entries) {
        auto it = ordinal.find(entry.stream_id);
        if (it == ordinal.end())
            throw InputError("render_gantt: unknown stream '" + entry.stream_id + "'");
        const Stream& s = instance.streams[static_cast<std::size_t>(it->second)];
        for (int l = s.first_link(); l <= s.last_link(); l++) {
            std::int64_t slot = (entry.injection_time + (l - s.a) - 1) % p;
            if (slot < 0) slot += p;
            auto& cell = grid[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(slot)];
            if (cell < 0) cell = it->second;
        }
    }
    return grid;
}

char stream_mark(std::int64_t ordinal) {
    static const char* alphabet =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    return alphabet[ordinal % 62];
}

void render_text(std::ostringstream& out, const Schedule& schedule, const Instance& instance) {
    const auto grid = occupancy_grid(schedule, instance);
    const int links = instance.topology.links();
    out << "direction " << to_string(schedule.direction) << ", hyperperiod "
        << schedule.hyperperiod << "\n";

    std::size_t label_width = 0;
    std::vector<std::string> labels(static_cast<std::size_t>(links));
    for (int l = 1; l <= links; l++) {
        labels[static_cast<std::size_t>(l - 1)] =
            port_for_link(l, schedule.switches, schedule.direction).label();
        label_width = std::max(label_width, labels[static_cast<std::size_t>(l - 1)].size());
    }
    for (int l = 1; l <= links; l++) {
        const auto& label = labels[static_cast<std::size_t>(l - 1)];
        out << label << std::string(label_width - label.size() + 1, ' ');
        for (std::int64_t cell : grid[static_cast<std::size_t>(l - 1)])
            out << (cell < 0 ? '.' : stream_mark(cell));
        out << "\n";
    }
}

// Deterministic hue from the stream id.
unsigned id_hue(const std::string& id) {
    unsigned h = 2166136261u;
    for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 16777619u;
    return h % 360;
}

void render_svg_section(std::ostringstream& out, const Schedule& schedule,
                        const Instance& instance, int y_offset) {
    constexpr int cell = 14;
    constexpr int label_space = 72;
    const auto grid = occupancy_grid(schedule, instance);
    const int links = instance.topology.links();

    out << "<text x=\"4\" y=\"" << y_offset + 12 << "\" class=\"t\">direction "
        << to_string(schedule.direction) << ", hyperperiod " << schedule.hyperperiod
        << "</text>\n";
    const int top = y_offset + 20;
    for (int l = 1; l <= links; l++) {
        const int y = top + (l - 1) * cell;
        out << "<text x=\"4\" y=\"" << y + cell - 4 << "\" class=\"t\">"
            << port_for_link(l, schedule.switches, schedule.direction).label() << "</text>\n";
        for (std::int64_t s = 0; s < schedule.hyperperiod; s++) {
            const std::int64_t occupant =
                grid[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(s)];
            const int x = label_space + static_cast<int>(s) * cell;
            if (occupant < 0) {
                out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
                    << "\" height=\"" << cell << "\" class=\"idle\"/>\n";
            } else {
                const auto& id = instance.streams[static_cast<std::size_t>(occupant)].id;
                out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
                    << "\" height=\"" << cell << "\" fill=\"hsl(" << id_hue(id)
                    << ",65%,60%)\"><title>" << id << "</title></rect>\n";
            }
        }
    }
}

int svg_section_height(const Instance& instance) {
    return 20 + instance.topology.links() * 14 + 10;
}

std::string svg_document(const std::vector<std::pair<const Schedule*, const Instance*>>& parts) {
    std::int64_t max_p = 1;
    int height = 4;
    for (const auto& [schedule, instance] : parts) {
        max_p = std::max(max_p, schedule->hyperperiod);
        height += svg_section_height(*instance);
    }
    const int width = 72 + static_cast<int>(max_p) * 14 + 4;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n"
        << "<style>.t{font:10px monospace;}.idle{fill:#f2f2f2;stroke:#ddd;stroke-width:0.5;}"
           "</style>\n";
    int y = 4;
    for (const auto& [schedule, instance] : parts) {
        render_svg_section(out, *schedule, *instance, y);
        y += svg_section_height(*instance);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_gantt(const Schedule& schedule, const Instance& instance, GanttFormat format) {
    if (format == GanttFormat::svg) return svg_document({{&schedule, &instance}});
    std::ostringstream out;
    render_text(out, schedule, instance);
    return out.str();
}

std::string render_gantt(const Schedule& ltr, const Instance& instance_ltr, const Schedule& rtl,
                         const Instance& instance_rtl, GanttFormat format) {
    if (format == GanttFormat::svg)
        return svg_document({{&ltr, &instance_ltr}, {&rtl, &instance_rtl}});
    std::ostringstream out;
    render_text(out, ltr, instance_ltr);
    out << "\n";
    render_text(out, rtl, instance_rtl);
    return out.str();
}

}  // namespace chainsched
