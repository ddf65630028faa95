#include "scfsim/config.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace scfsim {

using nlohmann::json;
using nlohmann::ordered_json;

ScenarioConfig default_config() {
    ScenarioConfig cfg;
    cfg.topology.area = Area{-200.0, 200.0, -200.0, 200.0};
    cfg.topology.ue_count = 20;
    cfg.topology.ue_height_m = 1.5;
    cfg.topology.radio_units.push_back(RuSpec{RuKind::macro, 0.0, 0.0, 25.0, 46.0, 128});
    for (int k = 0; k < 5; ++k) {
        const double ang = 2.0 * std::numbers::pi * k / 5.0;
        cfg.topology.radio_units.push_back(
            RuSpec{RuKind::micro, 140.0 * std::cos(ang), 140.0 * std::sin(ang), 10.0, 30.0, 32});
    }
    cfg.run.seeds.resize(15);
    for (int i = 0; i < 15; ++i) {
        cfg.run.seeds[i] = static_cast<std::uint64_t>(i + 1);
    }
    return cfg;
}

std::string to_string(RuKind kind) {
    return kind == RuKind::macro ? "macro" : "micro";
}

std::string to_string(RappMode mode) {
    return mode == RappMode::fixed ? "fixed" : "sweep_select";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config error at " + path + ": " + what);
}

void require_finite(double v, const std::string& path) {
    if (!std::isfinite(v)) {
        fail(path, "value must be finite");
    }
}

void require_positive(double v, const std::string& path) {
    require_finite(v, path);
    if (v <= 0.0) {
        fail(path, "value must be > 0");
    }
}

RuKind parse_kind(const std::string& s, const std::string& path) {
    if (s == "macro") {
        return RuKind::macro;
    }
    if (s == "micro") {
        return RuKind::micro;
    }
    fail(path, "unknown radio unit kind '" + s + "' (expected macro|micro)");
}

RappMode parse_rapp_mode(const std::string& s, const std::string& path) {
    if (s == "fixed") {
        return RappMode::fixed;
    }
    if (s == "sweep_select") {
        return RappMode::sweep_select;
    }
    fail(path, "unknown rapp_mode '" + s + "' (expected fixed|sweep_select)");
}

const json& member(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) {
        fail(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

double get_num(const json& j, const char* key, const std::string& path) {
    const json& v = member(j, key, path);
    if (!v.is_number()) {
        fail(path + "." + key, "expected a number");
    }
    return v.get<double>();
}

int get_int(const json& j, const char* key, const std::string& path) {
    const json& v = member(j, key, path);
    if (!v.is_number_integer()) {
        fail(path + "." + key, "expected an integer");
    }
    return v.get<int>();
}

std::string get_str(const json& j, const char* key, const std::string& path) {
    const json& v = member(j, key, path);
    if (!v.is_string()) {
        fail(path + "." + key, "expected a string");
    }
    return v.get<std::string>();
}

}  // namespace

void validate(const ScenarioConfig& cfg) {
    const auto& topo = cfg.topology;
    if (topo.radio_units.empty()) {
        fail("topology.radio_units", "at least one radio unit is required");
    }
    if (topo.ue_count < 1) {
        fail("topology.ue_count", "at least one user terminal is required");
    }
    if (!(topo.area.x_max > topo.area.x_min) || !(topo.area.y_max > topo.area.y_min)) {
        fail("topology.area", "area is degenerate (max bounds must exceed min bounds)");
    }
    require_finite(topo.ue_height_m, "topology.ue_height_m");
    for (std::size_t i = 0; i < topo.radio_units.size(); ++i) {
        const auto& ru = topo.radio_units[i];
        const std::string p = "topology.radio_units[" + std::to_string(i) + "]";
        require_finite(ru.tx_power_dbm, p + ".tx_power_dbm");
        require_finite(ru.x, p + ".x");
        require_finite(ru.y, p + ".y");
        require_finite(ru.height_m, p + ".height_m");
        if (ru.n_antennas < 1) {
            fail(p + ".n_antennas", "must be >= 1");
        }
    }

    const auto& car = cfg.carrier;
    require_positive(car.center_freq_ghz, "carrier.center_freq_ghz");
    require_positive(car.bandwidth_mhz, "carrier.bandwidth_mhz");
    require_positive(car.rb_bandwidth_hz, "carrier.rb_bandwidth_hz");
    require_positive(car.tti_duration_s, "carrier.tti_duration_s");
    require_finite(car.noise_figure_db, "carrier.noise_figure_db");
    if (car.n_rb < 1) {
        fail("carrier.n_rb", "must be >= 1");
    }
    if (static_cast<double>(car.n_rb) * car.rb_bandwidth_hz > car.bandwidth_mhz * 1e6) {
        fail("carrier", "n_rb * rb_bandwidth_hz exceeds the carrier bandwidth");
    }

    require_positive(cfg.channel.path_loss_exponent_macro, "channel.path_loss_exponent_macro");
    require_positive(cfg.channel.path_loss_exponent_micro, "channel.path_loss_exponent_micro");
    if (cfg.channel.shadowing_sigma_db < 0.0 || !std::isfinite(cfg.channel.shadowing_sigma_db)) {
        fail("channel.shadowing_sigma_db", "must be >= 0");
    }

    const auto& pm = cfg.power_model;
    require_positive(pm.macro.p_fixed_w, "power_model.macro.p_fixed_w");
    require_positive(pm.macro.p_per_antenna_w, "power_model.macro.p_per_antenna_w");
    require_positive(pm.micro.p_fixed_w, "power_model.micro.p_fixed_w");
    require_positive(pm.micro.p_per_antenna_w, "power_model.micro.p_per_antenna_w");
    if (!(pm.pa_efficiency > 0.0) || pm.pa_efficiency > 1.0) {
        fail("power_model.pa_efficiency", "must lie in (0, 1]");
    }

    if (cfg.scheduler.l_max < 1) {
        fail("scheduler.l_max", "must be >= 1");
    }
    require_positive(cfg.scheduler.se_cap_bps_hz, "scheduler.se_cap_bps_hz");

    if (cfg.control.scs < 1) {
        fail("control.scs", "must be >= 1");
    }
    if (cfg.control.scs_list.empty()) {
        fail("control.scs_list", "must be non-empty");
    }
    for (int s : cfg.control.scs_list) {
        if (s < 1) {
            fail("control.scs_list", "every entry must be >= 1");
        }
    }

    if (cfg.run.n_tti < 1) {
        fail("run.n_tti", "must be >= 1");
    }
    if (cfg.run.seeds.empty()) {
        fail("run.seeds", "must be non-empty");
    }
    if (cfg.run.threads < 0) {
        fail("run.threads", "must be >= 0 (0 = auto)");
    }
}

ScenarioConfig config_from_json(const json& j) {
    ScenarioConfig cfg = default_config();

    const json& topo = member(j, "topology", "$");
    const json& area = member(topo, "area", "topology");
    cfg.topology.area.x_min = get_num(area, "x_min", "topology.area");
    cfg.topology.area.x_max = get_num(area, "x_max", "topology.area");
    cfg.topology.area.y_min = get_num(area, "y_min", "topology.area");
    cfg.topology.area.y_max = get_num(area, "y_max", "topology.area");
    cfg.topology.ue_count = get_int(topo, "ue_count", "topology");
    cfg.topology.ue_height_m = get_num(topo, "ue_height_m", "topology");
    const json& rus = member(topo, "radio_units", "topology");
    if (!rus.is_array()) {
        fail("topology.radio_units", "expected an array");
    }
    cfg.topology.radio_units.clear();
    for (std::size_t i = 0; i < rus.size(); ++i) {
        const std::string p = "topology.radio_units[" + std::to_string(i) + "]";
        const json& r = rus[i];
        RuSpec spec;
        spec.kind = parse_kind(get_str(r, "kind", p), p + ".kind");
        spec.x = get_num(r, "x", p);
        spec.y = get_num(r, "y", p);
        spec.height_m = get_num(r, "height_m", p);
        spec.tx_power_dbm = get_num(r, "tx_power_dbm", p);
        spec.n_antennas = get_int(r, "n_antennas", p);
        cfg.topology.radio_units.push_back(spec);
    }

    const json& car = member(j, "carrier", "$");
    cfg.carrier.center_freq_ghz = get_num(car, "center_freq_ghz", "carrier");
    cfg.carrier.bandwidth_mhz = get_num(car, "bandwidth_mhz", "carrier");
    cfg.carrier.n_rb = get_int(car, "n_rb", "carrier");
    cfg.carrier.rb_bandwidth_hz = get_num(car, "rb_bandwidth_hz", "carrier");
    cfg.carrier.tti_duration_s = get_num(car, "tti_duration_s", "carrier");
    cfg.carrier.noise_figure_db = get_num(car, "noise_figure_db", "carrier");

    const json& ch = member(j, "channel", "$");
    cfg.channel.path_loss_exponent_macro = get_num(ch, "path_loss_exponent_macro", "channel");
    cfg.channel.path_loss_exponent_micro = get_num(ch, "path_loss_exponent_micro", "channel");
    cfg.channel.shadowing_sigma_db = get_num(ch, "shadowing_sigma_db", "channel");

    const json& pm = member(j, "power_model", "$");
    const json& pmm = member(pm, "macro", "power_model");
    cfg.power_model.macro.p_fixed_w = get_num(pmm, "p_fixed_w", "power_model.macro");
    cfg.power_model.macro.p_per_antenna_w = get_num(pmm, "p_per_antenna_w", "power_model.macro");
    const json& pmu = member(pm, "micro", "power_model");
    cfg.power_model.micro.p_fixed_w = get_num(pmu, "p_fixed_w", "power_model.micro");
    cfg.power_model.micro.p_per_antenna_w = get_num(pmu, "p_per_antenna_w", "power_model.micro");
    cfg.power_model.pa_efficiency = get_num(pm, "pa_efficiency", "power_model");

    const json& sch = member(j, "scheduler", "$");
    cfg.scheduler.l_max = get_int(sch, "l_max", "scheduler");
    cfg.scheduler.se_cap_bps_hz = get_num(sch, "se_cap_bps_hz", "scheduler");

    const json& ctl = member(j, "control", "$");
    cfg.control.scs = get_int(ctl, "scs", "control");
    const json& sl = member(ctl, "scs_list", "control");
    if (!sl.is_array()) {
        fail("control.scs_list", "expected an array of integers");
    }
    cfg.control.scs_list = sl.get<std::vector<int>>();
    cfg.control.rapp_mode = parse_rapp_mode(get_str(ctl, "rapp_mode", "control"), "control.rapp_mode");

    const json& run = member(j, "run", "$");
    cfg.run.n_tti = get_int(run, "n_tti", "run");
    const json& seeds = member(run, "seeds", "run");
    if (!seeds.is_array()) {
        fail("run.seeds", "expected an array of integers");
    }
    cfg.run.seeds = seeds.get<std::vector<std::uint64_t>>();
    if (run.contains("threads")) {
        cfg.run.threads = get_int(run, "threads", "run");
    }

    validate(cfg);
    return cfg;
}

ordered_json config_to_json(const ScenarioConfig& cfg) {
    ordered_json j;
    j["topology"]["area"] = {{"x_min", cfg.topology.area.x_min},
                             {"x_max", cfg.topology.area.x_max},
                             {"y_min", cfg.topology.area.y_min},
                             {"y_max", cfg.topology.area.y_max}};
    j["topology"]["ue_count"] = cfg.topology.ue_count;
    j["topology"]["ue_height_m"] = cfg.topology.ue_height_m;
    j["topology"]["radio_units"] = ordered_json::array();
    for (const auto& ru : cfg.topology.radio_units) {
        j["topology"]["radio_units"].push_back({{"kind", to_string(ru.kind)},
                                                {"x", ru.x},
                                                {"y", ru.y},
                                                {"height_m", ru.height_m},
                                                {"tx_power_dbm", ru.tx_power_dbm},
                                                {"n_antennas", ru.n_antennas}});
    }
    j["carrier"] = {{"center_freq_ghz", cfg.carrier.center_freq_ghz},
                    {"bandwidth_mhz", cfg.carrier.bandwidth_mhz},
                    {"n_rb", cfg.carrier.n_rb},
                    {"rb_bandwidth_hz", cfg.carrier.rb_bandwidth_hz},
                    {"tti_duration_s", cfg.carrier.tti_duration_s},
                    {"noise_figure_db", cfg.carrier.noise_figure_db}};
    j["channel"] = {{"path_loss_exponent_macro", cfg.channel.path_loss_exponent_macro},
                    {"path_loss_exponent_micro", cfg.channel.path_loss_exponent_micro},
                    {"shadowing_sigma_db", cfg.channel.shadowing_sigma_db}};
    j["power_model"] = {{"macro",
                         {{"p_fixed_w", cfg.power_model.macro.p_fixed_w},
                          {"p_per_antenna_w", cfg.power_model.macro.p_per_antenna_w}}},
                        {"micro",
                         {{"p_fixed_w", cfg.power_model.micro.p_fixed_w},
                          {"p_per_antenna_w", cfg.power_model.micro.p_per_antenna_w}}},
                        {"pa_efficiency", cfg.power_model.pa_efficiency}};
    j["scheduler"] = {{"l_max", cfg.scheduler.l_max},
                      {"se_cap_bps_hz", cfg.scheduler.se_cap_bps_hz}};
    j["control"] = {{"scs", cfg.control.scs},
                    {"scs_list", cfg.control.scs_list},
                    {"rapp_mode", to_string(cfg.control.rapp_mode)}};
    j["run"] = {{"n_tti", cfg.run.n_tti},
                {"seeds", cfg.run.seeds},
                {"threads", cfg.run.threads}};
    return j;
}

ScenarioConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ConfigError("cannot open config file: " + file.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse " + file.string() + ": " + e.what());
    }
    return config_from_json(j);
}

}  // namespace scfsim
