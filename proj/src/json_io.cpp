#include "chainsched/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chainsched {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

json parse_or_throw(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw InputError(what + ": malformed JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " + e.what());
    }
}

std::int64_t require_int(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    if (!obj[key].is_number_integer())
        throw InputError(where + ": field '" + key + "' must be an integer");
    return obj[key].get<std::int64_t>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    if (!obj[key].is_string())
        throw InputError(where + ": field '" + key + "' must be a string");
    return obj[key].get<std::string>();
}

void check_format_version(const json& obj, const std::string& where) {
    if (!obj.contains("format_version")) return;
    if (!obj["format_version"].is_number_integer() ||
        obj["format_version"].get<int>() != kFormatVersion)
        throw InputError(where + ": unsupported format_version (expected " +
                         std::to_string(kFormatVersion) + ")");
}

// Serialized leftover fields after erasing the known ones; empty string when
// nothing is left.
std::string leftover_json(json obj, std::initializer_list<const char*> known) {
    for (const char* key : known) obj.erase(key);
    return obj.empty() ? std::string() : obj.dump();
}

void merge_extras(json& obj, const std::string& extra) {
    if (extra.empty()) return;
    json fields = json::parse(extra);
    for (auto& [key, value] : fields.items()) obj[key] = value;
}

json violation_to_json(const Violation& v, Direction direction) {
    json obj;
    obj["kind"] = to_string(v.kind);
    obj["direction"] = to_string(direction);
    obj["streams"] = v.streams;
    obj["detail"] = v.detail;
    switch (v.kind) {
        case ViolationKind::port_conflict:
            obj["link"] = v.link;
            obj["slot"] = v.slot;
            break;
        case ViolationKind::not_no_wait:
            obj["replication"] = v.replication;
            obj["link"] = v.link;
            break;
        case ViolationKind::window_violation:
            obj["replication"] = v.replication;
            obj["layer"] = v.layer;
            break;
        case ViolationKind::missing_replication:
            break;
    }
    return obj;
}

}  // namespace

RawInstance parse_instance_json(const std::string& text) {
    const json doc = parse_or_throw(text, "instance");
    if (!doc.is_object()) throw InputError("instance: top level must be an object");
    check_format_version(doc, "instance");

    RawInstance raw;
    raw.topology.switches = static_cast<int>(require_int(doc, "switches", "instance"));
    if (raw.topology.switches < 2)
        throw InputError("instance: field 'switches' must be at least 2");
    if (!doc.contains("streams") || !doc["streams"].is_array())
        throw InputError("instance: missing array field 'streams'");

    for (const auto& item : doc["streams"]) {
        if (!item.is_object()) throw InputError("instance: stream entries must be objects");
        RawStream s;
        s.id = require_string(item, "id", "stream");
        const std::string where = "stream '" + s.id + "'";
        s.src_switch = static_cast<int>(require_int(item, "src_switch", where));
        s.dst_switch = static_cast<int>(require_int(item, "dst_switch", where));
        s.period = require_int(item, "period", where);
        s.extra_json = leftover_json(item, {"id", "src_switch", "dst_switch", "period"});
        raw.streams.push_back(std::move(s));
    }
    raw.extra_json = leftover_json(doc, {"format_version", "switches", "streams"});
    return raw;
}

RawInstance load_instance_file(const std::string& path) {
    return parse_instance_json(read_file(path));
}

std::string instance_to_json(const RawInstance& raw) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["switches"] = raw.topology.switches;
    doc["streams"] = json::array();
    for (const auto& s : raw.streams) {
        json item;
        item["id"] = s.id;
        item["src_switch"] = s.src_switch;
        item["dst_switch"] = s.dst_switch;
        item["period"] = s.period;
        merge_extras(item, s.extra_json);
        doc["streams"].push_back(std::move(item));
    }
    merge_extras(doc, raw.extra_json);
    return doc.dump(2) + "\n";
}

namespace {

json schedule_to_json_obj(const Schedule& schedule) {
    json obj;
    obj["direction"] = to_string(schedule.direction);
    obj["hyperperiod"] = schedule.hyperperiod;
    obj["entries"] = json::array();
    for (const auto& e : schedule.entries) {
        obj["entries"].push_back(
            {{"stream", e.stream_id}, {"replication", e.replication},
             {"injection_time", e.injection_time}});
    }
    return obj;
}

Schedule schedule_from_json_obj(const json& obj, int switches) {
    Schedule schedule;
    schedule.switches = switches;
    const std::string dir = require_string(obj, "direction", "schedule");
    auto parsed = direction_from_string(dir);
    if (!parsed) throw InputError("schedule: unknown direction '" + dir + "'");
    schedule.direction = *parsed;
    schedule.hyperperiod = require_int(obj, "hyperperiod", "schedule");
    if (schedule.hyperperiod < 1)
        throw InputError("schedule: hyperperiod must be positive");
    if (!obj.contains("entries") || !obj["entries"].is_array())
        throw InputError("schedule: missing array field 'entries'");
    for (const auto& item : obj["entries"]) {
        ScheduleEntry e;
        e.stream_id = require_string(item, "stream", "schedule entry");
        e.replication = require_int(item, "replication", "schedule entry");
        e.injection_time = require_int(item, "injection_time", "schedule entry");
        schedule.entries.push_back(std::move(e));
    }
    return schedule;
}

}  // namespace

std::string schedule_to_json(const ScheduleDocument& doc) {
    json out;
    out["format_version"] = kFormatVersion;
    out["switches"] = doc.switches;
    out["schedules"] = json::array({schedule_to_json_obj(doc.ltr), schedule_to_json_obj(doc.rtl)});
    if (!doc.metadata_json.empty()) out["metadata"] = json::parse(doc.metadata_json);
    return out.dump(2) + "\n";
}

ScheduleDocument parse_schedule_json(const std::string& text) {
    const json doc = parse_or_throw(text, "schedule");
    if (!doc.is_object()) throw InputError("schedule: top level must be an object");
    check_format_version(doc, "schedule");

    ScheduleDocument out;
    out.switches = static_cast<int>(require_int(doc, "switches", "schedule"));
    if (!doc.contains("schedules") || !doc["schedules"].is_array())
        throw InputError("schedule: missing array field 'schedules'");
    bool have_ltr = false, have_rtl = false;
    for (const auto& item : doc["schedules"]) {
        Schedule s = schedule_from_json_obj(item, out.switches);
        if (s.direction == Direction::left_to_right) {
            if (have_ltr) throw InputError("schedule: duplicate ltr section");
            out.ltr = std::move(s);
            have_ltr = true;
        } else {
            if (have_rtl) throw InputError("schedule: duplicate rtl section");
            out.rtl = std::move(s);
            have_rtl = true;
        }
    }
    if (!have_ltr || !have_rtl)
        throw InputError("schedule: document must contain one ltr and one rtl section");
    out.ltr.switches = out.rtl.switches = out.switches;
    if (doc.contains("metadata")) out.metadata_json = doc["metadata"].dump();
    return out;
}

ScheduleDocument load_schedule_file(const std::string& path) {
    return parse_schedule_json(read_file(path));
}

std::string coloring_to_json(const Instance& ltr, const GoodColoring& coloring_ltr,
                             const Instance& rtl, const GoodColoring& coloring_rtl) {
    json doc = json::object();
    auto add = [&doc](const Instance& instance, const GoodColoring& coloring) {
        for (std::size_t i = 0; i < instance.streams.size(); i++) {
            const auto& layers = coloring.layers[i];
            for (std::size_t r = 0; r < layers.size(); r++)
                doc[instance.streams[i].id + "#" + std::to_string(r + 1)] = layers[r];
        }
    };
    add(ltr, coloring_ltr);
    add(rtl, coloring_rtl);
    return doc.dump(2) + "\n";
}

std::string report_to_json(const ValidationReport& ltr, const ValidationReport& rtl) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["verdict"] = ltr.pass() && rtl.pass() ? "pass" : "fail";
    doc["violations"] = json::array();
    for (const auto& v : ltr.violations)
        doc["violations"].push_back(violation_to_json(v, Direction::left_to_right));
    for (const auto& v : rtl.violations)
        doc["violations"].push_back(violation_to_json(v, Direction::right_to_left));
    return doc.dump(2) + "\n";
}

std::string gcl_to_json(const GclTable& table) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["switches"] = table.switches;
    doc["ports"] = json::array();
    for (const auto& port : table.ports) {
        json p;
        p["from"] = port.port.from;
        p["to"] = port.port.to;
        p["hyperperiod"] = port.hyperperiod;
        p["entries"] = json::array();
        for (const auto& e : port.entries)
            p["entries"].push_back({{"start", e.start}, {"end", e.end}, {"gates", e.gates}});
        doc["ports"].push_back(std::move(p));
    }
    return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw InputError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace chainsched
