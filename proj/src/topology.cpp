#include "scfsim/topology.hpp"

#include "scfsim/config.hpp"
#include "scfsim/rng.hpp"

#include <cmath>

namespace scfsim {

double distance_m(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Deployment build_deployment(const ScenarioConfig& config, std::uint64_t seed) {
    validate(config);

    Deployment dep;
    dep.carrier = config.carrier;
    dep.area = config.topology.area;

    dep.radio_units.reserve(config.topology.radio_units.size());
    for (std::size_t i = 0; i < config.topology.radio_units.size(); ++i) {
        const RuSpec& spec = config.topology.radio_units[i];
        RadioUnit ru;
        ru.id = static_cast<int>(i);
        ru.position = Position{spec.x, spec.y, spec.height_m};
        ru.tx_power_dbm = spec.tx_power_dbm;
        ru.n_antennas = spec.n_antennas;
        ru.kind = spec.kind;
        ru.height_m = spec.height_m;
        dep.radio_units.push_back(ru);
    }

    rng::Stream placement = rng::substream(seed, "ue-placement");
    const Area& area = dep.area;
    dep.user_terminals.reserve(static_cast<std::size_t>(config.topology.ue_count));
    for (int u = 0; u < config.topology.ue_count; ++u) {
        UserTerminal ue;
        ue.id = u;
        ue.position.x = area.x_min + placement.next_unit() * (area.x_max - area.x_min);
        ue.position.y = area.y_min + placement.next_unit() * (area.y_max - area.y_min);
        ue.position.z = config.topology.ue_height_m;
        dep.user_terminals.push_back(ue);
    }

    return dep;
}

}  // namespace scfsim
