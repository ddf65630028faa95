#pragma once

#include "scfsim/channel.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <vector>

namespace scfsim {

enum class ClusterAlgorithm { top_n_rsrp };

// A1 policy from the rApp: the serving cluster size N plus the formation
// algorithm the xApp should apply. Clamped to n_ru at application time.
struct A1Policy {
    int scs = 1;
    ClusterAlgorithm algorithm = ClusterAlgorithm::top_n_rsrp;
    int policy_id = 0;
};

// per UE: serving RU ids, strongest RSRP first
struct ClusterMap {
    std::vector<std::vector<int>> serving;

    int n_ue() const { return static_cast<int>(serving.size()); }
};

struct E2ClusterConfig {
    ClusterMap clusters;
    int applying_tti = 0;
};

struct O1KpiReport {
    int window_begin_tti = 0;  // inclusive
    int window_end_tti = 0;    // exclusive
    double window_duration_s = 0.0;
    std::vector<double> ue_throughput_bps;
    std::vector<double> ru_consumed_power_w;  // window average
    double total_bits = 0.0;
    double total_energy_j = 0.0;
    double ran_ee_bit_per_j = 0.0;
    std::vector<double> per_user_ee_bit_per_j;
};

// one O1 measurement sample per TTI
struct TtiKpiSample {
    std::vector<double> ue_bits;
    std::vector<double> ru_consumed_w;
};

A1Policy rapp_fixed_policy(int n);

// argmax of observed RAN EE; ties break toward the smaller cluster size
A1Policy rapp_sweep_select(const std::map<int, double>& ran_ee_by_scs);

// Top-N formation: for each UE the min(N, n_ru) RUs of highest RSRP,
// ties broken by lower RU id. Throws if a report misses an RU entry.
ClusterMap xapp_form_clusters(const std::vector<RsrpReport>& reports, const A1Policy& policy,
                              int n_ru);

O1KpiReport aggregate_o1_kpis(const std::vector<TtiKpiSample>& tti_results, int window_begin_tti,
                              int window_end_tti, double tti_duration_s);

nlohmann::ordered_json to_json(const O1KpiReport& report);
nlohmann::ordered_json to_json(const E2ClusterConfig& config);

}  // namespace scfsim
