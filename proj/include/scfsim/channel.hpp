#pragma once

#include "scfsim/config.hpp"
#include "scfsim/rng.hpp"
#include "scfsim/topology.hpp"

#include <Eigen/Core>

#include <complex>
#include <span>
#include <vector>

namespace scfsim {

// Log-distance path loss: 32.4 + 20 log10(f_GHz) + 10 n log10(d_3D).
// Distances below 1 m are clamped to 1 m.
double path_loss_db(double d3d_m, double f_ghz, double exponent = 3.0);

// zero-mean log-normal shadowing in dB
double draw_shadowing_db(rng::Stream& stream, double sigma_db);

double large_scale_gain_db(double pl_db, double sf_db);

// one draw per (ue, ru) pair per drop
rng::Stream shadowing_stream(std::uint64_t seed, int ue, int ru);

// i.i.d. Rayleigh block fading, regenerated per (tti, rb, ru, ue); the key
// makes every draw order-independent
rng::Stream fading_stream(std::uint64_t seed, int tti, int rb, int ru, int ue);

// fills out with i.i.d. CN(0,1) entries, one per antenna
void draw_small_scale(rng::Stream& stream, std::span<std::complex<double>> out);

// gain_db(ue, ru) = -path_loss + shadowing
struct LargeScaleTable {
    Eigen::MatrixXd gain_db;

    int n_ue() const { return static_cast<int>(gain_db.rows()); }
    int n_ru() const { return static_cast<int>(gain_db.cols()); }
};

LargeScaleTable build_large_scale_table(const Deployment& dep, const ChannelConfig& channel,
                                        std::uint64_t seed);

// Long-term averaged per-RB reference power: tx_power_dbm - 10 log10(n_rb)
// + gain_db. No fast fading, no noise.
double rsrp_dbm(const RadioUnit& ru, double gain_db, const Carrier& carrier);

struct RsrpReport {
    int ue_id = 0;
    int tti = 0;
    std::vector<double> rsrp_dbm;  // indexed by RU id
};

std::vector<RsrpReport> measure_rsrp(const Deployment& dep, const LargeScaleTable& table, int tti);

}  // namespace scfsim
