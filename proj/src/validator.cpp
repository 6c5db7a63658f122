#include "chainsched/validator.hpp"

#include <algorithm>
#include <unordered_map>

namespace chainsched {

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::port_conflict: return "port-conflict";
        case ViolationKind::not_no_wait: return "not-no-wait";
        case ViolationKind::window_violation: return "window-violation";
        case ViolationKind::missing_replication: return "missing-replication";
    }
    return "?";
}

namespace {

// Positive modulus into [1, m] for arbitrary (possibly negative) slots.
std::int64_t wrap_slot(std::int64_t slot, std::int64_t m) {
    std::int64_t r = (slot - 1) % m;
    if (r < 0) r += m;
    return r + 1;
}

}  // namespace

ExpandedSchedule expand(const Schedule& schedule, const Instance& instance) {
    if (schedule.direction != instance.direction)
        throw InputError("validate: schedule direction '" +
                         std::string(to_string(schedule.direction)) +
                         "' does not match the instance");
    if (schedule.switches != instance.topology.switches)
        throw InputError("validate: schedule has " + std::to_string(schedule.switches) +
                         " switches, instance has " +
                         std::to_string(instance.topology.switches));
    if (schedule.hyperperiod != instance.hyperperiod)
        throw InputError("validate: schedule hyperperiod " +
                         std::to_string(schedule.hyperperiod) + " does not match instance " +
                         std::to_string(instance.hyperperiod));

    std::unordered_map<std::string, std::uint32_t> ordinal;
    for (std::uint32_t i = 0; i < instance.streams.size(); i++)
        ordinal[instance.streams[i].id] = i;

    ExpandedSchedule expanded;
    expanded.hyperperiod = schedule.hyperperiod;
    expanded.replications.reserve(schedule.entries.size());
    for (const auto& entry : schedule.entries) {
        auto it = ordinal.find(entry.stream_id);
        if (it == ordinal.end())
            throw InputError("validate: schedule references unknown stream '" +
                             entry.stream_id + "'");
        const Stream& s = instance.streams[it->second];
        ExpandedReplication rep;
        rep.stream_ordinal = it->second;
        rep.replication = entry.replication;
        rep.injection_time = entry.injection_time;
        rep.slots.reserve(static_cast<std::size_t>(s.span()));
        for (int l = s.first_link(); l <= s.last_link(); l++)
            rep.slots.push_back(entry.injection_time + (l - s.a));
        expanded.replications.push_back(std::move(rep));
    }
    return expanded;
}

ValidationReport audit(const ExpandedSchedule& expanded, const Instance& instance) {
    ValidationReport report;
    const std::int64_t p = expanded.hyperperiod;

    // Replication inventory per stream: indices must be exactly 1..p/p_s.
    std::vector<std::vector<std::int64_t>> seen(instance.streams.size());
    for (const auto& rep : expanded.replications) {
        if (rep.stream_ordinal >= instance.streams.size())
            throw InputError("audit: replication references stream ordinal out of range");
        seen[rep.stream_ordinal].push_back(rep.replication);
    }
    for (std::size_t i = 0; i < instance.streams.size(); i++) {
        const Stream& s = instance.streams[i];
        const std::int64_t expected = p / s.period;
        auto& indices = seen[i];
        std::sort(indices.begin(), indices.end());
        bool exact = static_cast<std::int64_t>(indices.size()) == expected;
        if (exact)
            for (std::int64_t r = 0; r < expected; r++)
                if (indices[static_cast<std::size_t>(r)] != r + 1) exact = false;
        if (!exact) {
            Violation v;
            v.kind = ViolationKind::missing_replication;
            v.streams = {s.id};
            v.detail = "stream '" + s.id + "' has " + std::to_string(indices.size()) +
                       " replications, expected " + std::to_string(expected) +
                       " with indices 1.." + std::to_string(expected);
            report.violations.push_back(std::move(v));
        }
    }

    // Windows and the no-wait property.
    for (const auto& rep : expanded.replications) {
        const Stream& s = instance.streams[rep.stream_ordinal];
        if (rep.replication >= 1 && rep.replication <= p / s.period) {
            const std::int64_t layer = rep.injection_time - s.a + 1;
            const std::int64_t lo = (rep.replication - 1) * s.period + 1;
            const std::int64_t hi = rep.replication * s.period;
            if (layer < lo || layer > hi) {
                Violation v;
                v.kind = ViolationKind::window_violation;
                v.streams = {s.id};
                v.replication = rep.replication;
                v.layer = layer;
                v.detail = "stream '" + s.id + "' replication " +
                           std::to_string(rep.replication) + ": implied layer " +
                           std::to_string(layer) + " outside window [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]";
                report.violations.push_back(std::move(v));
            }
        }
        if (static_cast<int>(rep.slots.size()) != s.span()) {
            Violation v;
            v.kind = ViolationKind::not_no_wait;
            v.streams = {s.id};
            v.replication = rep.replication;
            v.detail = "stream '" + s.id + "' replication " + std::to_string(rep.replication) +
                       ": occupies " + std::to_string(rep.slots.size()) + " links, traverses " +
                       std::to_string(s.span());
            report.violations.push_back(std::move(v));
            continue;
        }
        for (std::size_t j = 0; j + 1 < rep.slots.size(); j++) {
            if (rep.slots[j + 1] != rep.slots[j] + 1) {
                Violation v;
                v.kind = ViolationKind::not_no_wait;
                v.streams = {s.id};
                v.replication = rep.replication;
                v.link = s.first_link() + static_cast<int>(j) + 1;
                v.detail = "stream '" + s.id + "' replication " +
                           std::to_string(rep.replication) + ": slot on link " +
                           std::to_string(v.link) + " is not the successor of link " +
                           std::to_string(v.link - 1);
                report.violations.push_back(std::move(v));
                break;
            }
        }
    }

    // Egress-port exclusivity over one hyperperiod. The schedule tiles
    // periodically, so cells are taken modulo p.
    std::unordered_map<std::int64_t, std::size_t> cell_owner;
    cell_owner.reserve(expanded.replications.size() * 2);
    for (std::size_t r = 0; r < expanded.replications.size(); r++) {
        const auto& rep = expanded.replications[r];
        const Stream& s = instance.streams[rep.stream_ordinal];
        for (std::size_t j = 0; j < rep.slots.size(); j++) {
            const int link = s.first_link() + static_cast<int>(j);
            if (link > instance.topology.links()) break;
            const std::int64_t slot = wrap_slot(rep.slots[j], p);
            const std::int64_t cell = static_cast<std::int64_t>(link) * (p + 1) + slot;
            auto [it, inserted] = cell_owner.try_emplace(cell, r);
            if (!inserted) {
                const auto& other = expanded.replications[it->second];
                Violation v;
                v.kind = ViolationKind::port_conflict;
                v.streams = {instance.streams[other.stream_ordinal].id, s.id};
                v.link = link;
                v.slot = slot;
                v.detail = "link " + std::to_string(link) + " slot " + std::to_string(slot) +
                           ": '" + v.streams[0] + "' and '" + v.streams[1] + "' collide";
                report.violations.push_back(std::move(v));
            }
        }
    }
    return report;
}

ValidationReport validate(const Schedule& schedule, const Instance& instance) {
    return audit(expand(schedule, instance), instance);
}

}  // namespace chainsched
