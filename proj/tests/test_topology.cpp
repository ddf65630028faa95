#include "scfsim/topology.hpp"

#include "scfsim/config.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace scfsim;

TEST_CASE("default config yields the reference scene") {
    const ScenarioConfig cfg = default_config();
    const Deployment dep = build_deployment(cfg, 1);
    REQUIRE(dep.n_ru() == 6);
    REQUIRE(dep.n_ue() == 20);
    CHECK(dep.radio_units[0].kind == RuKind::macro);
    CHECK(dep.radio_units[0].tx_power_dbm == doctest::Approx(46.0));
    CHECK(dep.radio_units[0].n_antennas == 128);
    for (int a = 1; a < 6; ++a) {
        CHECK(dep.radio_units[a].kind == RuKind::micro);
        CHECK(dep.radio_units[a].tx_power_dbm == doctest::Approx(30.0));
        CHECK(dep.radio_units[a].n_antennas == 32);
        CHECK(dep.radio_units[a].id == a);
    }
    CHECK(dep.carrier.n_rb == 133);
}

TEST_CASE("minimal scene builds") {
    ScenarioConfig cfg = default_config();
    cfg.topology.ue_count = 1;
    cfg.topology.radio_units = {RuSpec{RuKind::macro, 0.0, 0.0, 25.0, 46.0, 128}};
    const Deployment dep = build_deployment(cfg, 0);
    CHECK(dep.n_ru() == 1);
    CHECK(dep.n_ue() == 1);
}

TEST_CASE("deployment is a pure function of config and seed") {
    const ScenarioConfig cfg = default_config();
    const Deployment a = build_deployment(cfg, 7);
    const Deployment b = build_deployment(cfg, 7);
    const Deployment c = build_deployment(cfg, 8);
    bool identical = true;
    bool differs = false;
    for (int u = 0; u < a.n_ue(); ++u) {
        identical &= a.user_terminals[u].position.x == b.user_terminals[u].position.x &&
                     a.user_terminals[u].position.y == b.user_terminals[u].position.y;
        differs |= a.user_terminals[u].position.x != c.user_terminals[u].position.x;
    }
    CHECK(identical);
    CHECK(differs);
}

TEST_CASE("UE positions stay inside the area for many seeds") {
    const ScenarioConfig cfg = default_config();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Deployment dep = build_deployment(cfg, seed);
        for (const auto& ue : dep.user_terminals) {
            REQUIRE(dep.area.contains(ue.position));
        }
    }
}

TEST_CASE("invalid configs are rejected with a descriptive error") {
    ScenarioConfig cfg = default_config();
    cfg.topology.ue_count = 0;
    CHECK_THROWS_WITH_AS(build_deployment(cfg, 1),
                         doctest::Contains("topology.ue_count"), ConfigError);

    cfg = default_config();
    cfg.topology.radio_units.clear();
    CHECK_THROWS_AS(build_deployment(cfg, 1), ConfigError);

    cfg = default_config();
    cfg.topology.area = Area{10.0, 10.0, -5.0, 5.0};
    CHECK_THROWS_WITH_AS(build_deployment(cfg, 1), doctest::Contains("degenerate"), ConfigError);

    cfg = default_config();
    cfg.carrier.n_rb = 200;  // 200 * 180 kHz > 25 MHz
    CHECK_THROWS_WITH_AS(build_deployment(cfg, 1), doctest::Contains("bandwidth"), ConfigError);
}

TEST_CASE("config json round-trips") {
    const ScenarioConfig cfg = test::tiny_config();
    const ScenarioConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.topology.ue_count == cfg.topology.ue_count);
    CHECK(back.topology.radio_units.size() == cfg.topology.radio_units.size());
    CHECK(back.carrier.n_rb == cfg.carrier.n_rb);
    CHECK(back.channel.shadowing_sigma_db == cfg.channel.shadowing_sigma_db);
    CHECK(back.scheduler.l_max == cfg.scheduler.l_max);
    CHECK(back.control.scs_list == cfg.control.scs_list);
    CHECK(back.run.seeds == cfg.run.seeds);
    // identical deployments from identical configs
    const Deployment a = build_deployment(cfg, 5);
    const Deployment b = build_deployment(back, 5);
    for (int u = 0; u < a.n_ue(); ++u) {
        CHECK(a.user_terminals[u].position.x == b.user_terminals[u].position.x);
    }
}

TEST_CASE("shipped default config matches the built-in defaults") {
    const ScenarioConfig shipped = load_config(std::string(SCFSIM_SOURCE_DIR) +
                                               "/configs/default.json");
    const ScenarioConfig builtin = default_config();
    CHECK(config_to_json(shipped) == config_to_json(builtin));
}
