#include "chainsched/feasibility.hpp"

namespace chainsched {

LoadProfile load_profile(const Instance& instance, int k) {
    if (k < 0 || k > instance.k_star)
        throw InputError("load_profile: level k out of range [0, k_star]");
    const int links = instance.topology.links();

    std::vector<std::int64_t> diff(static_cast<std::size_t>(links) + 1, 0);
    for (const auto& s : instance.streams) {
        int kexp = 0;
        while ((std::int64_t{1} << kexp) < s.period) kexp++;
        if (kexp > k) continue;
        const std::int64_t weight = std::int64_t{1} << (k - kexp);
        diff[static_cast<std::size_t>(s.first_link() - 1)] += weight;
        diff[static_cast<std::size_t>(s.last_link())] -= weight;
    }

    LoadProfile profile;
    profile.k = k;
    profile.loads.resize(static_cast<std::size_t>(links), 0);
    std::int64_t running = 0;
    for (int l = 0; l < links; l++) {
        running += diff[static_cast<std::size_t>(l)];
        profile.loads[static_cast<std::size_t>(l)] = running;
    }
    return profile;
}

Feasibility decide(const Instance& instance) {
    const LoadProfile profile = load_profile(instance, instance.k_star);
    const std::int64_t capacity = std::int64_t{1} << instance.k_star;
    for (int l = 1; l <= instance.topology.links(); l++) {
        if (profile.at(l) > capacity)
            return Feasibility{false, l, profile.at(l), capacity};
    }
    return Feasibility{true, 0, 0, capacity};
}

}  // namespace chainsched
