#pragma once

#include <cstdint>
#include <vector>

namespace scfsim {

struct ScenarioConfig;

enum class RuKind { macro, micro };

struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance_m(const Position& a, const Position& b);

struct RadioUnit {
    int id = 0;
    Position position;
    double tx_power_dbm = 0.0;
    int n_antennas = 1;
    RuKind kind = RuKind::macro;
    double height_m = 0.0;
};

// single receive antenna
struct UserTerminal {
    int id = 0;
    Position position;
};

struct Carrier {
    double center_freq_ghz = 3.6;
    double bandwidth_mhz = 25.0;
    int n_rb = 133;
    double rb_bandwidth_hz = 180000.0;
    double tti_duration_s = 0.001;
    double noise_figure_db = 9.0;
};

struct Area {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    bool contains(const Position& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
};

struct Deployment {
    std::vector<RadioUnit> radio_units;
    std::vector<UserTerminal> user_terminals;
    Carrier carrier;
    Area area;

    int n_ru() const { return static_cast<int>(radio_units.size()); }
    int n_ue() const { return static_cast<int>(user_terminals.size()); }
};

// RU positions are taken verbatim from the config; UE positions are drawn
// uniformly over the area from the (seed, "ue-placement") stream. Pure
// function of (config, seed).
Deployment build_deployment(const ScenarioConfig& config, std::uint64_t seed);

}  // namespace scfsim
