#include "scfsim/channel.hpp"

#include <cmath>

namespace scfsim {

double path_loss_db(double d3d_m, double f_ghz, double exponent) {
    const double d = std::max(d3d_m, 1.0);
    return 32.4 + 20.0 * std::log10(f_ghz) + 10.0 * exponent * std::log10(d);
}

double draw_shadowing_db(rng::Stream& stream, double sigma_db) {
    if (sigma_db == 0.0) {
        return 0.0;
    }
    return sigma_db * stream.next_normal();
}

double large_scale_gain_db(double pl_db, double sf_db) {
    return -pl_db + sf_db;
}

rng::Stream shadowing_stream(std::uint64_t seed, int ue, int ru) {
    return rng::substream(seed, "shadowing", ue, ru);
}

rng::Stream fading_stream(std::uint64_t seed, int tti, int rb, int ru, int ue) {
    return rng::substream(seed, "fading", tti, rb, ru, ue);
}

void draw_small_scale(rng::Stream& stream, std::span<std::complex<double>> out) {
    stream.fill_cn(out);
}

LargeScaleTable build_large_scale_table(const Deployment& dep, const ChannelConfig& channel,
                                        std::uint64_t seed) {
    LargeScaleTable table;
    table.gain_db.resize(dep.n_ue(), dep.n_ru());
    for (int u = 0; u < dep.n_ue(); ++u) {
        for (int a = 0; a < dep.n_ru(); ++a) {
            const RadioUnit& ru = dep.radio_units[a];
            const double d = distance_m(dep.user_terminals[u].position, ru.position);
            const double pl = path_loss_db(d, dep.carrier.center_freq_ghz, channel.exponent_for(ru.kind));
            rng::Stream s = shadowing_stream(seed, u, a);
            const double sf = draw_shadowing_db(s, channel.shadowing_sigma_db);
            table.gain_db(u, a) = large_scale_gain_db(pl, sf);
        }
    }
    return table;
}

double rsrp_dbm(const RadioUnit& ru, double gain_db, const Carrier& carrier) {
    return ru.tx_power_dbm - 10.0 * std::log10(static_cast<double>(carrier.n_rb)) + gain_db;
}

std::vector<RsrpReport> measure_rsrp(const Deployment& dep, const LargeScaleTable& table, int tti) {
    std::vector<RsrpReport> reports;
    reports.reserve(static_cast<std::size_t>(dep.n_ue()));
    for (int u = 0; u < dep.n_ue(); ++u) {
        RsrpReport rep;
        rep.ue_id = u;
        rep.tti = tti;
        rep.rsrp_dbm.resize(static_cast<std::size_t>(dep.n_ru()));
        for (int a = 0; a < dep.n_ru(); ++a) {
            rep.rsrp_dbm[a] = rsrp_dbm(dep.radio_units[a], table.gain_db(u, a), dep.carrier);
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace scfsim
