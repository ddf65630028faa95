#pragma once

#include "scfsim/topology.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace scfsim {

struct RuSpec {
    RuKind kind = RuKind::macro;
    double x = 0.0;
    double y = 0.0;
    double height_m = 0.0;
    double tx_power_dbm = 0.0;
    int n_antennas = 1;
};

struct TopologyConfig {
    Area area;
    int ue_count = 20;
    double ue_height_m = 1.5;
    std::vector<RuSpec> radio_units;
};

struct ChannelConfig {
    double path_loss_exponent_macro = 3.5;
    double path_loss_exponent_micro = 2.6;
    double shadowing_sigma_db = 8.0;

    double exponent_for(RuKind kind) const {
        return kind == RuKind::macro ? path_loss_exponent_macro : path_loss_exponent_micro;
    }
};

struct PowerKindConfig {
    double p_fixed_w = 0.0;
    double p_per_antenna_w = 0.0;
};

struct PowerModelConfig {
    PowerKindConfig macro{30.0, 0.4};
    PowerKindConfig micro{5.0, 0.2};
    double pa_efficiency = 0.35;
};

struct SchedulerConfig {
    int l_max = 12;
    double se_cap_bps_hz = 7.6;
};

enum class RappMode { fixed, sweep_select };

struct ControlConfig {
    int scs = 3;
    std::vector<int> scs_list{1, 2, 3, 4, 5, 6};
    RappMode rapp_mode = RappMode::fixed;
};

struct RunSection {
    int n_tti = 500;
    std::vector<std::uint64_t> seeds;  // defaults to 1..15
    int threads = 0;                   // 0 = hardware concurrency
};

struct ScenarioConfig {
    TopologyConfig topology;
    Carrier carrier;
    ChannelConfig channel;
    PowerModelConfig power_model;
    SchedulerConfig scheduler;
    ControlConfig control;
    RunSection run;
};

// Calibrated defaults: 1 macro (46 dBm, 128 antennas) centered at 25 m and
// 5 micros (30 dBm, 32 antennas) on a 140 m circle at 10 m, 20 UEs on a
// 400 m x 400 m area.
ScenarioConfig default_config();

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Throws ConfigError with a path-qualified message on any schema violation.
void validate(const ScenarioConfig& config);

ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const ScenarioConfig& config);
ScenarioConfig load_config(const std::filesystem::path& file);

std::string to_string(RuKind kind);
std::string to_string(RappMode mode);

}  // namespace scfsim
