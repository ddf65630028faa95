#pragma once

#include "scfsim/ric.hpp"
#include "scfsim/topology.hpp"

#include <vector>

namespace scfsim {

struct TtiSchedule {
    int tti = 0;
    // served[ru][rb] = UE ids co-scheduled on that resource block
    std::vector<std::vector<std::vector<int>>> served;
};

// U_a per RU: UEs whose cluster contains the RU, sorted by UE id
std::vector<std::vector<int>> candidate_sets(const ClusterMap& clusters, int n_ru);

// Round-robin OFDMA allocation. Per RU a with L = min(n_antennas, l_max):
// all candidates are served on every RB if they fit, otherwise RB r serves
// the L users at circular offset ((tti + r) * L) mod |U_a|.
TtiSchedule schedule_tti(const ClusterMap& clusters, const Deployment& dep, int tti,
                         int l_max_config);

}  // namespace scfsim
