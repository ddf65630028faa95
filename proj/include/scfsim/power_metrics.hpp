#pragma once

#include "scfsim/config.hpp"
#include "scfsim/topology.hpp"

#include <utility>
#include <vector>

namespace scfsim {

struct PowerModelParams {
    double p_fixed_w = 0.0;
    double p_per_antenna_w = 0.0;
    double pa_efficiency = 1.0;
};

PowerModelParams params_for(const PowerModelConfig& config, RuKind kind);

// P = p_fixed + n_antennas * p_per_antenna + radiated / pa_efficiency.
// Throws if the radiated average exceeds the RU's transmit power budget.
double ru_consumed_power_w(double radiated_avg_w, const RadioUnit& ru,
                           const PowerModelParams& params);

double ran_ee(double total_bits, double total_energy_j);

// equal energy attribution: user_bits / (total_energy / n_ue), so that the
// mean over UEs equals the RAN EE exactly
double per_user_ee(double user_bits, double total_energy_j, int n_ue);

// empirical CDF over distinct values, last probability = 1
std::vector<std::pair<double, double>> ecdf(std::vector<double> values);

// per-drop energy accounting, one slot per RU plus per-UE delivered bits
struct EnergyLedger {
    std::vector<double> ru_radiated_j;
    std::vector<double> ru_consumed_j;
    std::vector<double> ue_bits;

    EnergyLedger(int n_ru, int n_ue)
        : ru_radiated_j(static_cast<std::size_t>(n_ru), 0.0),
          ru_consumed_j(static_cast<std::size_t>(n_ru), 0.0),
          ue_bits(static_cast<std::size_t>(n_ue), 0.0) {}

    void add_ru_tti(int ru, double radiated_w, double consumed_w, double tti_duration_s) {
        ru_radiated_j[ru] += radiated_w * tti_duration_s;
        ru_consumed_j[ru] += consumed_w * tti_duration_s;
    }

    double total_bits() const;
    double total_consumed_j() const;
};

}  // namespace scfsim
