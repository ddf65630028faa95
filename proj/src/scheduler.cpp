#include "scfsim/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace scfsim {

std::vector<std::vector<int>> candidate_sets(const ClusterMap& clusters, int n_ru) {
    std::vector<std::vector<int>> cand(static_cast<std::size_t>(n_ru));
    for (int u = 0; u < clusters.n_ue(); ++u) {
        for (int a : clusters.serving[u]) {
            if (a < 0 || a >= n_ru) {
                throw std::invalid_argument("cluster of UE " + std::to_string(u) +
                                            " references unknown RU " + std::to_string(a));
            }
            cand[a].push_back(u);
        }
    }
    // cluster map is ordered per UE, iteration above is UE-ascending already,
    // but keep the contract explicit
    for (auto& c : cand) {
        std::sort(c.begin(), c.end());
    }
    return cand;
}

TtiSchedule schedule_tti(const ClusterMap& clusters, const Deployment& dep, int tti,
                         int l_max_config) {
    if (l_max_config < 1) {
        throw std::invalid_argument("l_max_config must be >= 1");
    }
    const int n_ru = dep.n_ru();
    const int n_rb = dep.carrier.n_rb;
    const auto cand = candidate_sets(clusters, n_ru);

    TtiSchedule sched;
    sched.tti = tti;
    sched.served.resize(static_cast<std::size_t>(n_ru));
    for (int a = 0; a < n_ru; ++a) {
        auto& per_rb = sched.served[a];
        per_rb.resize(static_cast<std::size_t>(n_rb));
        const auto& users = cand[a];
        const int n_cand = static_cast<int>(users.size());
        if (n_cand == 0) {
            continue;
        }
        const int l_max = std::min(dep.radio_units[a].n_antennas, l_max_config);
        if (n_cand <= l_max) {
            for (int rb = 0; rb < n_rb; ++rb) {
                per_rb[rb] = users;
            }
            continue;
        }
        for (int rb = 0; rb < n_rb; ++rb) {
            const long long offset =
                (static_cast<long long>(tti) + rb) * l_max % n_cand;
            auto& served = per_rb[rb];
            served.reserve(static_cast<std::size_t>(l_max));
            for (int i = 0; i < l_max; ++i) {
                served.push_back(users[(offset + i) % n_cand]);
            }
        }
    }
    return sched;
}

}  // namespace scfsim
