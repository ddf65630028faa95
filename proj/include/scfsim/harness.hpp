#pragma once

#include "scfsim/channel.hpp"
#include "scfsim/config.hpp"
#include "scfsim/phy.hpp"
#include "scfsim/ric.hpp"
#include "scfsim/topology.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

namespace scfsim {

struct DropDiagnostics {
    // worst |sum of allocated powers - budget| / budget over all (ru, rb)
    // with at least one served user
    double max_power_sum_rel_err = 0.0;
    // worst (average radiated - budget) in W over RUs; <= 0 means compliant
    double max_radiated_excess_w = 0.0;
    long zf_rows_dropped = 0;
};

struct DropResult {
    std::uint64_t seed = 0;
    int scs = 0;
    std::vector<double> ue_bits;
    std::vector<double> ru_radiated_j;
    std::vector<double> ru_consumed_j;
    std::vector<RsrpReport> rsrp;
    ClusterMap clusters;
    O1KpiReport kpi;
    DropDiagnostics diag;
};

// Per-step intermediates for oracle-style recomputation in tests. Only
// sensible on tiny scenes; memory grows with n_tti * n_rb * n_ru.
struct DropTrace {
    Deployment deployment;
    LargeScaleTable large_scale;

    struct Transmission {
        int tti = 0;
        int rb = 0;
        int ru = 0;
        std::vector<int> users;
        double power_per_user_w = 0.0;
        ChannelMatrix h_all;  // n_ue x n_antennas, large-scale applied
        Eigen::MatrixXcd w;   // n_antennas x |users|
    };
    std::vector<Transmission> transmissions;

    std::vector<Eigen::MatrixXd> sinr_per_tti;  // each n_ue x n_rb
    std::vector<Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>> served_per_tti;
    std::vector<std::vector<double>> radiated_w_per_tti;  // [tti][ru]
    std::vector<std::vector<double>> consumed_w_per_tti;  // [tti][ru]
};

// One full drop: deployment -> RSRP -> cluster formation -> per-TTI
// schedule/precode/SINR/rate/energy -> KPI aggregation. Pure function of its
// arguments; thread count never enters.
DropResult run_drop(const ScenarioConfig& config, int scs, std::uint64_t seed, int n_tti,
                    DropTrace* trace = nullptr);

struct RunConfig {
    ScenarioConfig scenario;
    std::vector<int> scs_list;
    std::vector<std::uint64_t> seeds;
    int n_tti = 1;
    RappMode rapp_mode = RappMode::fixed;
    int threads = 0;  // 0 = hardware concurrency
};

// scs_list/seeds/n_tti/mode lifted from the scenario's control and run
// sections
RunConfig run_config_from_scenario(const ScenarioConfig& scenario);

struct SweepResult {
    std::vector<int> scs_list;
    std::vector<std::uint64_t> seeds;
    std::vector<DropResult> drops;  // scs-major, seed-minor
    std::map<int, double> mean_ran_ee;
    int best_scs = 0;
    std::optional<A1Policy> selected_policy;

    const DropResult& drop(std::size_t scs_idx, std::size_t seed_idx) const {
        return drops[scs_idx * seeds.size() + seed_idx];
    }
};

// Executes every (scs, seed) drop, in parallel across drops when configured;
// aggregation is a deterministic ordered reduction, so results and files are
// identical for any thread count.
SweepResult run_sweep(const RunConfig& config);

void write_sweep_outputs(const SweepResult& sweep, const RunConfig& config,
                         const std::filesystem::path& out_dir);

void write_drop_outputs(const DropResult& drop, const ScenarioConfig& config, int n_tti,
                        const std::filesystem::path& out_dir);

}  // namespace scfsim
