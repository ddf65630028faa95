#include "scfsim/scheduler.hpp"

#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace scfsim;

namespace {

// deployment with a single RU and enough antennas, n_rb RBs
Deployment one_ru_deployment(int n_ue, int n_ant, int n_rb) {
    Deployment dep;
    RadioUnit ru;
    ru.id = 0;
    ru.n_antennas = n_ant;
    dep.radio_units = {ru};
    dep.user_terminals.resize(n_ue);
    for (int u = 0; u < n_ue; ++u) {
        dep.user_terminals[u].id = u;
    }
    dep.carrier.n_rb = n_rb;
    return dep;
}

ClusterMap all_on_ru0(int n_ue) {
    ClusterMap map;
    map.serving.assign(n_ue, {0});
    return map;
}

}  // namespace

TEST_CASE("under capacity everyone is served on every RB") {
    const Deployment dep = one_ru_deployment(8, 64, 5);
    ClusterMap map;
    map.serving.assign(8, {});
    map.serving[3] = {0};
    map.serving[7] = {0};
    const TtiSchedule sched = schedule_tti(map, dep, 17, 8);
    for (int rb = 0; rb < 5; ++rb) {
        CHECK(sched.served[0][rb] == std::vector<int>{3, 7});
    }
}

TEST_CASE("oversubscribed RUs rotate a circular window") {
    const Deployment dep = one_ru_deployment(10, 64, 4);
    const ClusterMap map = all_on_ru0(10);
    const TtiSchedule sched = schedule_tti(map, dep, 0, 8);
    CHECK(sched.served[0][0] == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(sched.served[0][1] == std::vector<int>{8, 9, 0, 1, 2, 3, 4, 5});
}

TEST_CASE("unselected RUs serve nobody") {
    Deployment dep = one_ru_deployment(6, 64, 3);
    RadioUnit extra;
    extra.id = 1;
    extra.n_antennas = 8;
    dep.radio_units.push_back(extra);
    const ClusterMap map = all_on_ru0(6);
    const TtiSchedule sched = schedule_tti(map, dep, 2, 8);
    for (int rb = 0; rb < 3; ++rb) {
        CHECK(sched.served[1][rb].empty());
    }
}

TEST_CASE("l_max clamps to the antenna count") {
    const Deployment dep = one_ru_deployment(5, 2, 3);
    const ClusterMap map = all_on_ru0(5);
    const TtiSchedule sched = schedule_tti(map, dep, 0, 8);
    for (int rb = 0; rb < 3; ++rb) {
        CHECK(sched.served[0][rb].size() == 2);
    }
}

TEST_CASE("round robin is fair over a full rotation") {
    const int n_ue = 10;
    const int n_rb = 7;
    const Deployment dep = one_ru_deployment(n_ue, 64, n_rb);
    const ClusterMap map = all_on_ru0(n_ue);
    std::map<int, long> count;
    for (int tti = 0; tti < n_ue; ++tti) {  // n_rb x |U| slots in total
        const TtiSchedule sched = schedule_tti(map, dep, tti, 8);
        for (int rb = 0; rb < n_rb; ++rb) {
            for (int u : sched.served[0][rb]) {
                ++count[u];
            }
        }
    }
    long lo = count.begin()->second;
    long hi = lo;
    for (const auto& [u, c] : count) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    CHECK(hi - lo <= 1);
}

TEST_CASE("schedule is a pure function of its arguments") {
    const Deployment dep = one_ru_deployment(9, 16, 6);
    const ClusterMap map = all_on_ru0(9);
    const TtiSchedule a = schedule_tti(map, dep, 5, 4);
    const TtiSchedule b = schedule_tti(map, dep, 5, 4);
    CHECK(a.served == b.served);
}

TEST_CASE("clusters referencing unknown RUs are rejected") {
    const Deployment dep = one_ru_deployment(2, 8, 2);
    ClusterMap map;
    map.serving = {{0}, {4}};
    CHECK_THROWS_WITH_AS(schedule_tti(map, dep, 0, 8), doctest::Contains("unknown RU"),
                         std::invalid_argument);
}
