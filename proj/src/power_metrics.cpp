#include "scfsim/power_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scfsim {

PowerModelParams params_for(const PowerModelConfig& config, RuKind kind) {
    const PowerKindConfig& k = kind == RuKind::macro ? config.macro : config.micro;
    return PowerModelParams{k.p_fixed_w, k.p_per_antenna_w, config.pa_efficiency};
}

double ru_consumed_power_w(double radiated_avg_w, const RadioUnit& ru,
                           const PowerModelParams& params) {
    if (radiated_avg_w < 0.0) {
        throw std::invalid_argument("radiated power must be >= 0");
    }
    const double max_radiated_w = std::pow(10.0, (ru.tx_power_dbm - 30.0) / 10.0);
    // tiny tolerance for accumulated rounding in the per-RB sums
    if (radiated_avg_w > max_radiated_w * (1.0 + 1e-9)) {
        throw std::invalid_argument("RU " + std::to_string(ru.id) + " radiates " +
                                    std::to_string(radiated_avg_w) + " W above its " +
                                    std::to_string(max_radiated_w) + " W budget");
    }
    return params.p_fixed_w + ru.n_antennas * params.p_per_antenna_w +
           radiated_avg_w / params.pa_efficiency;
}

double ran_ee(double total_bits, double total_energy_j) {
    if (!(total_energy_j > 0.0)) {
        throw std::invalid_argument("RAN EE undefined for non-positive energy");
    }
    return total_bits / total_energy_j;
}

double per_user_ee(double user_bits, double total_energy_j, int n_ue) {
    if (n_ue < 1) {
        throw std::invalid_argument("per-user EE needs n_ue >= 1");
    }
    if (!(total_energy_j > 0.0)) {
        throw std::invalid_argument("per-user EE undefined for non-positive energy");
    }
    return user_bits / (total_energy_j / n_ue);
}

std::vector<std::pair<double, double>> ecdf(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("ecdf of an empty sample");
    }
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    std::vector<std::pair<double, double>> points;
    for (std::size_t i = 0; i < values.size(); ++i) {
        // emit one point per distinct value, at its last occurrence
        if (i + 1 == values.size() || values[i + 1] != values[i]) {
            points.emplace_back(values[i], static_cast<double>(i + 1) / n);
        }
    }
    return points;
}

double EnergyLedger::total_bits() const {
    return std::accumulate(ue_bits.begin(), ue_bits.end(), 0.0);
}

double EnergyLedger::total_consumed_j() const {
    return std::accumulate(ru_consumed_j.begin(), ru_consumed_j.end(), 0.0);
}

}  // namespace scfsim
