#include "scfsim/channel.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace scfsim;
using test::near;

TEST_CASE("path loss matches the log-distance formula") {
    // 32.4 + 20 log10(3.6) + 30 log10(100) = 103.526
    CHECK(near(path_loss_db(100.0, 3.6), 103.5261, 0.01));
    // distance term vanishes at 1 m
    CHECK(near(path_loss_db(1.0, 3.6), 43.5261, 0.01));
    // below 1 m clamps to 1 m
    CHECK(path_loss_db(0.2, 3.6) == path_loss_db(1.0, 3.6));
}

TEST_CASE("doubling the distance adds 30 log10(2) dB") {
    for (double d : {1.0, 3.7, 25.0, 140.0, 2000.0}) {
        CHECK(near(path_loss_db(2 * d, 3.6) - path_loss_db(d, 3.6), 9.0309, 1e-4));
    }
}

TEST_CASE("path loss is monotone in distance and uses the exponent") {
    double prev = path_loss_db(1.0, 3.6);
    for (double d = 2.0; d < 1000.0; d *= 1.7) {
        const double pl = path_loss_db(d, 3.6);
        CHECK(pl > prev);
        prev = pl;
    }
    CHECK(near(path_loss_db(100.0, 3.6, 3.5) - path_loss_db(10.0, 3.6, 3.5), 35.0, 1e-9));
}

TEST_CASE("shadowing draws") {
    rng::Stream zero = shadowing_stream(1, 0, 0);
    CHECK(draw_shadowing_db(zero, 0.0) == 0.0);

    double sum = 0.0;
    double sq = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        rng::Stream s = shadowing_stream(1, i, 0);
        const double v = draw_shadowing_db(s, 7.0);
        sum += v;
        sq += v * v;
    }
    const double mean = sum / n;
    const double stddev = std::sqrt(sq / n - mean * mean);
    CHECK(std::abs(mean) < 0.1);
    CHECK(near(stddev, 7.0, 0.1));
}

TEST_CASE("large-scale gain composes path loss and shadowing") {
    CHECK(large_scale_gain_db(103.53, 0.0) == doctest::Approx(-103.53));
    CHECK(large_scale_gain_db(103.53, 5.0) == doctest::Approx(-98.53));
    CHECK(large_scale_gain_db(43.53, -3.0) == doctest::Approx(-46.53));
}

TEST_CASE("small-scale draws are unit-power, shaped, and keyed") {
    std::vector<std::complex<double>> h(128);
    rng::Stream s = fading_stream(1, 0, 0, 0, 0);
    draw_small_scale(s, h);
    CHECK(h.size() == 128);

    // same key twice -> identical vector
    std::vector<std::complex<double>> h2(128);
    rng::Stream s2 = fading_stream(1, 0, 0, 0, 0);
    draw_small_scale(s2, h2);
    CHECK(h == h2);

    // Monte-Carlo unit variance, n_ant = 1 entries
    double power = 0.0;
    const int n = 100000;
    std::vector<std::complex<double>> one(1);
    for (int i = 0; i < n; ++i) {
        rng::Stream si = fading_stream(2, i, 0, 0, 0);
        draw_small_scale(si, one);
        power += std::norm(one[0]);
    }
    CHECK(near(power / n, 1.0, 0.02));
}

TEST_CASE("fading draws are independent of evaluation order") {
    std::vector<std::complex<double>> a(16);
    std::vector<std::complex<double>> b(16);
    {
        rng::Stream s1 = fading_stream(5, 1, 2, 3, 4);
        draw_small_scale(s1, a);
    }
    {
        // interleave a different stream before replaying the same key
        std::vector<std::complex<double>> other(64);
        rng::Stream sx = fading_stream(5, 9, 9, 0, 0);
        draw_small_scale(sx, other);
        rng::Stream s1 = fading_stream(5, 1, 2, 3, 4);
        draw_small_scale(s1, b);
    }
    CHECK(a == b);
}

TEST_CASE("rsrp follows the per-RB reference power rule") {
    RadioUnit macro;
    macro.tx_power_dbm = 46.0;
    Carrier carrier;
    carrier.n_rb = 133;
    // 46 - 21.2385 - 103.5261 = -78.7646
    CHECK(near(rsrp_dbm(macro, -103.5261, carrier), -78.7646, 0.01));
    // lossless: per-RB transmit power exactly
    CHECK(near(rsrp_dbm(macro, 0.0, carrier), 46.0 - 10.0 * std::log10(133.0), 1e-12));
    // macro vs micro at equal gain differ by exactly the power offset
    RadioUnit micro;
    micro.tx_power_dbm = 30.0;
    CHECK(near(rsrp_dbm(macro, -90.0, carrier) - rsrp_dbm(micro, -90.0, carrier), 16.0, 1e-12));
}

TEST_CASE("effective channel power matches the large-scale gain") {
    // mean ||sqrt(g) h||^2 over fading realizations = n_ant * g
    const double gain_db = -87.0;
    const double g = std::pow(10.0, gain_db / 10.0);
    const int n_ant = 8;
    const int reps = 4000;
    std::vector<std::complex<double>> h(n_ant);
    double acc = 0.0;
    for (int i = 0; i < reps; ++i) {
        rng::Stream s = fading_stream(3, i, 0, 0, 0);
        draw_small_scale(s, h);
        double norm2 = 0.0;
        for (const auto& z : h) {
            norm2 += std::norm(z);
        }
        acc += g * norm2;
    }
    CHECK(test::rel_near(acc / reps, n_ant * g, 0.03));
}

TEST_CASE("rsrp ranking is invariant to a constant gain shift") {
    const ScenarioConfig cfg = default_config();
    const Deployment dep = build_deployment(cfg, 11);
    LargeScaleTable table = build_large_scale_table(dep, cfg.channel, 11);
    const auto base = measure_rsrp(dep, table, 0);
    LargeScaleTable shifted = table;
    shifted.gain_db.row(4).array() += 17.5;  // shift all gains of UE 4
    const auto moved = measure_rsrp(dep, shifted, 0);

    auto ranking = [&](const RsrpReport& r) {
        std::vector<int> order(r.rsrp_dbm.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (r.rsrp_dbm[a] != r.rsrp_dbm[b]) {
                return r.rsrp_dbm[a] > r.rsrp_dbm[b];
            }
            return a < b;
        });
        return order;
    };
    CHECK(ranking(base[4]) == ranking(moved[4]));
}

TEST_CASE("large-scale table is reproducible per seed") {
    const ScenarioConfig cfg = default_config();
    const Deployment dep = build_deployment(cfg, 3);
    const LargeScaleTable a = build_large_scale_table(dep, cfg.channel, 3);
    const LargeScaleTable b = build_large_scale_table(dep, cfg.channel, 3);
    CHECK(a.gain_db == b.gain_db);
    const LargeScaleTable c = build_large_scale_table(dep, cfg.channel, 4);
    CHECK(a.gain_db != c.gain_db);
}
