#pragma once

#include "scfsim/config.hpp"

#include <cmath>

namespace scfsim::test {

inline bool near(double value, double expected, double abs_tol) {
    return std::abs(value - expected) <= abs_tol;
}

inline bool rel_near(double value, double expected, double rel_tol) {
    return std::abs(value - expected) <= rel_tol * std::abs(expected);
}

// 2 RUs / 2 UEs / 2 antennas each / 4 RBs scene used by the oracle and
// engine-level tests
inline ScenarioConfig tiny_config() {
    ScenarioConfig cfg = default_config();
    cfg.topology.area = Area{-100.0, 100.0, -100.0, 100.0};
    cfg.topology.ue_count = 2;
    cfg.topology.radio_units = {
        RuSpec{RuKind::macro, -50.0, 0.0, 20.0, 40.0, 2},
        RuSpec{RuKind::micro, 50.0, 0.0, 10.0, 30.0, 2},
    };
    cfg.carrier.n_rb = 4;
    cfg.control.scs_list = {1, 2};
    cfg.run.n_tti = 2;
    cfg.run.seeds = {42};
    return cfg;
}

}  // namespace scfsim::test
