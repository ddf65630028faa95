#pragma once

#include "scfsim/topology.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace scfsim {

// channel rows are the natural unit here, so keep them contiguous
using ChannelMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Zero-forcing precoder for one (ru, rb). Columns are proportional to the
// columns of H^H (H H^H)^-1, normalized to unit norm, so H * W is diagonal.
struct ZfPrecode {
    Eigen::MatrixXcd w;     // n_antennas x |kept|
    std::vector<int> kept;  // row indices of h_rows that survived
    int n_dropped = 0;
};

// h_rows: K x M matrix whose rows are the co-scheduled users' channels.
// If the Gram matrix is rank deficient or its condition estimate exceeds
// cond_limit, the weakest-norm rows are dropped until it is well behaved.
ZfPrecode zf_precode(const ChannelMatrix& h_rows, double cond_limit = 1e12);

// total transmit power spread evenly over all resource blocks
double per_rb_budget_w(double tx_power_dbm, int n_rb);

// equal split among co-scheduled users
double power_split(double p_rb_budget_w, int k_users);

// thermal noise per RB: -174 dBm/Hz + 10 log10(rb_bandwidth) + noise figure
double noise_power_w(double rb_bandwidth_hz, double noise_figure_db);

// All streams radiated by one RU on one RB. gains(u, j) = h_u . w_j for
// every UE u in the deployment against precoder column j (targets users[j]).
struct RbRuStreams {
    int ru = 0;
    const Eigen::MatrixXcd* gains = nullptr;
    std::span<const int> users;
    double power_per_user_w = 0.0;
};

// Non-coherent joint transmission: signal powers of a UE's own streams add;
// every other stream on the RB contributes interference.
// sinr_out must have one slot per UE.
void accumulate_rb_sinr(std::span<const RbRuStreams> streams, double noise_w,
                        std::span<double> sinr_out);

// single-UE convenience wrapper over accumulate_rb_sinr
double compute_sinr(int ue, std::span<const RbRuStreams> streams, double noise_w);

// Shannon rate with a spectral-efficiency cap, summed over the RBs where the
// UE is served (mask nonzero).
double ue_tti_bits(std::span<const double> sinr_per_rb, std::span<const std::uint8_t> served_mask,
                   const Carrier& carrier, double se_cap_bps_hz);

}  // namespace scfsim
