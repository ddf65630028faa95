#include "scfsim/ric.hpp"

#include "scfsim/power_metrics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scfsim {

A1Policy rapp_fixed_policy(int n) {
    if (n < 1) {
        throw std::invalid_argument("serving cluster size must be >= 1, got " + std::to_string(n));
    }
    return A1Policy{n, ClusterAlgorithm::top_n_rsrp, 0};
}

A1Policy rapp_sweep_select(const std::map<int, double>& ran_ee_by_scs) {
    if (ran_ee_by_scs.empty()) {
        throw std::invalid_argument("rapp_sweep_select: empty EE history");
    }
    int best_scs = 0;
    double best_ee = -1.0;
    for (const auto& [scs, ee] : ran_ee_by_scs) {
        if (!std::isfinite(ee) || ee < 0.0) {
            throw std::invalid_argument("rapp_sweep_select: EE for scs " + std::to_string(scs) +
                                        " is not a finite non-negative value");
        }
        // map iterates in ascending scs order, so strict > keeps the smaller
        // scs on ties
        if (ee > best_ee) {
            best_ee = ee;
            best_scs = scs;
        }
    }
    A1Policy policy = rapp_fixed_policy(best_scs);
    policy.policy_id = 1;
    return policy;
}

ClusterMap xapp_form_clusters(const std::vector<RsrpReport>& reports, const A1Policy& policy,
                              int n_ru) {
    if (policy.scs < 1) {
        throw std::invalid_argument("xapp_form_clusters: policy.scs must be >= 1");
    }
    ClusterMap map;
    map.serving.resize(reports.size());
    const int n = std::min(policy.scs, n_ru);
    for (const auto& rep : reports) {
        if (static_cast<int>(rep.rsrp_dbm.size()) != n_ru) {
            throw std::invalid_argument("RSRP report of UE " + std::to_string(rep.ue_id) +
                                        " covers " + std::to_string(rep.rsrp_dbm.size()) +
                                        " RUs, expected " + std::to_string(n_ru));
        }
        for (int a = 0; a < n_ru; ++a) {
            if (!std::isfinite(rep.rsrp_dbm[a])) {
                throw std::invalid_argument("RSRP report of UE " + std::to_string(rep.ue_id) +
                                            " is missing RU " + std::to_string(a));
            }
        }
        std::vector<int> order(static_cast<std::size_t>(n_ru));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
            if (rep.rsrp_dbm[lhs] != rep.rsrp_dbm[rhs]) {
                return rep.rsrp_dbm[lhs] > rep.rsrp_dbm[rhs];
            }
            return lhs < rhs;
        });
        order.resize(static_cast<std::size_t>(n));
        if (rep.ue_id < 0 || rep.ue_id >= static_cast<int>(map.serving.size())) {
            throw std::invalid_argument("RSRP report carries out-of-range UE id " +
                                        std::to_string(rep.ue_id));
        }
        map.serving[rep.ue_id] = std::move(order);
    }
    return map;
}

O1KpiReport aggregate_o1_kpis(const std::vector<TtiKpiSample>& tti_results, int window_begin_tti,
                              int window_end_tti, double tti_duration_s) {
    if (window_end_tti <= window_begin_tti) {
        throw std::invalid_argument("aggregate_o1_kpis: empty KPI window");
    }
    if (window_begin_tti < 0 || window_end_tti > static_cast<int>(tti_results.size())) {
        throw std::invalid_argument("aggregate_o1_kpis: window not covered by TTI results");
    }
    const int n_tti = window_end_tti - window_begin_tti;
    const std::size_t n_ue = tti_results[window_begin_tti].ue_bits.size();
    const std::size_t n_ru = tti_results[window_begin_tti].ru_consumed_w.size();

    O1KpiReport rep;
    rep.window_begin_tti = window_begin_tti;
    rep.window_end_tti = window_end_tti;
    rep.window_duration_s = n_tti * tti_duration_s;
    rep.ue_throughput_bps.assign(n_ue, 0.0);
    rep.ru_consumed_power_w.assign(n_ru, 0.0);

    std::vector<double> ue_bits(n_ue, 0.0);
    for (int t = window_begin_tti; t < window_end_tti; ++t) {
        const TtiKpiSample& s = tti_results[t];
        for (std::size_t u = 0; u < n_ue; ++u) {
            ue_bits[u] += s.ue_bits[u];
        }
        for (std::size_t a = 0; a < n_ru; ++a) {
            rep.ru_consumed_power_w[a] += s.ru_consumed_w[a];
        }
    }
    for (std::size_t a = 0; a < n_ru; ++a) {
        rep.ru_consumed_power_w[a] /= n_tti;
        rep.total_energy_j += rep.ru_consumed_power_w[a] * rep.window_duration_s;
    }
    for (std::size_t u = 0; u < n_ue; ++u) {
        rep.total_bits += ue_bits[u];
        rep.ue_throughput_bps[u] = ue_bits[u] / rep.window_duration_s;
    }
    rep.ran_ee_bit_per_j = ran_ee(rep.total_bits, rep.total_energy_j);
    rep.per_user_ee_bit_per_j.resize(n_ue);
    for (std::size_t u = 0; u < n_ue; ++u) {
        rep.per_user_ee_bit_per_j[u] =
            per_user_ee(ue_bits[u], rep.total_energy_j, static_cast<int>(n_ue));
    }
    return rep;
}

nlohmann::ordered_json to_json(const O1KpiReport& report) {
    nlohmann::ordered_json j;
    j["window_begin_tti"] = report.window_begin_tti;
    j["window_end_tti"] = report.window_end_tti;
    j["window_duration_s"] = report.window_duration_s;
    j["ue_throughput_bps"] = report.ue_throughput_bps;
    j["ru_consumed_power_w"] = report.ru_consumed_power_w;
    j["total_bits"] = report.total_bits;
    j["total_energy_j"] = report.total_energy_j;
    j["ran_ee_bit_per_j"] = report.ran_ee_bit_per_j;
    j["per_user_ee_bit_per_j"] = report.per_user_ee_bit_per_j;
    return j;
}

nlohmann::ordered_json to_json(const E2ClusterConfig& config) {
    nlohmann::ordered_json j;
    j["applying_tti"] = config.applying_tti;
    j["serving_clusters"] = nlohmann::ordered_json::array();
    for (std::size_t u = 0; u < config.clusters.serving.size(); ++u) {
        j["serving_clusters"].push_back(
            {{"ue_id", static_cast<int>(u)}, {"ru_ids", config.clusters.serving[u]}});
    }
    return j;
}

}  // namespace scfsim
