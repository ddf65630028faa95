#include "scfsim/phy.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scfsim {

ZfPrecode zf_precode(const ChannelMatrix& h_rows, double cond_limit) {
    const int k_in = static_cast<int>(h_rows.rows());
    const int m = static_cast<int>(h_rows.cols());
    if (k_in < 1 || m < 1) {
        throw std::invalid_argument("zf_precode: empty channel matrix");
    }
    if (k_in > m) {
        throw std::invalid_argument("zf_precode: more users than antennas (" +
                                    std::to_string(k_in) + " > " + std::to_string(m) + ")");
    }

    ZfPrecode out;
    out.kept.resize(static_cast<std::size_t>(k_in));
    std::iota(out.kept.begin(), out.kept.end(), 0);

    ChannelMatrix h_sub;
    Eigen::MatrixXcd gram;
    Eigen::LLT<Eigen::MatrixXcd> llt;
    while (!out.kept.empty()) {
        const int k = static_cast<int>(out.kept.size());
        const bool full = k == k_in;
        if (!full) {
            h_sub.resize(k, m);
            for (int i = 0; i < k; ++i) {
                h_sub.row(i) = h_rows.row(out.kept[i]);
            }
        }
        const ChannelMatrix& h = full ? h_rows : h_sub;
        gram.noalias() = h * h.adjoint();
        llt.compute(gram);
        bool ok = llt.info() == Eigen::Success;
        if (ok) {
            // cheap condition estimate from the Cholesky diagonal;
            // cond(G) ~ (max L_ii / min L_ii)^2
            const auto diag = llt.matrixLLT().diagonal().real();
            const double dmax = diag.maxCoeff();
            const double dmin = diag.minCoeff();
            ok = dmin > 0.0 && (dmax / dmin) * (dmax / dmin) <= cond_limit;
        }
        if (ok) {
            Eigen::MatrixXcd inv = llt.solve(Eigen::MatrixXcd::Identity(k, k));
            out.w.noalias() = h.adjoint() * inv;
            for (int j = 0; j < k; ++j) {
                out.w.col(j).normalize();
            }
            return out;
        }
        // drop the weakest-norm row and retry
        int weakest = 0;
        double weakest_norm = h_rows.row(out.kept[0]).squaredNorm();
        for (int i = 1; i < k; ++i) {
            const double norm = h_rows.row(out.kept[i]).squaredNorm();
            if (norm < weakest_norm) {
                weakest_norm = norm;
                weakest = i;
            }
        }
        out.kept.erase(out.kept.begin() + weakest);
        ++out.n_dropped;
    }
    out.w.resize(m, 0);
    return out;
}

double per_rb_budget_w(double tx_power_dbm, int n_rb) {
    if (n_rb < 1) {
        throw std::invalid_argument("per_rb_budget_w: n_rb must be >= 1");
    }
    return std::pow(10.0, (tx_power_dbm - 30.0) / 10.0) / n_rb;
}

double power_split(double p_rb_budget_w, int k_users) {
    if (k_users < 1) {
        throw std::invalid_argument("power_split: k_users must be >= 1");
    }
    if (!(p_rb_budget_w > 0.0)) {
        throw std::invalid_argument("power_split: budget must be > 0");
    }
    return p_rb_budget_w / k_users;
}

double noise_power_w(double rb_bandwidth_hz, double noise_figure_db) {
    const double dbm = -174.0 + 10.0 * std::log10(rb_bandwidth_hz) + noise_figure_db;
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

void accumulate_rb_sinr(std::span<const RbRuStreams> streams, double noise_w,
                        std::span<double> sinr_out) {
    const int n_ue = static_cast<int>(sinr_out.size());
    // signal reuses sinr_out, interference goes to a stack-friendly buffer
    std::vector<double> interference(static_cast<std::size_t>(n_ue), 0.0);
    std::fill(sinr_out.begin(), sinr_out.end(), 0.0);

    for (const RbRuStreams& s : streams) {
        const Eigen::MatrixXcd& g = *s.gains;
        const int k = static_cast<int>(s.users.size());
        for (int j = 0; j < k; ++j) {
            const int target = s.users[j];
            for (int u = 0; u < n_ue; ++u) {
                const double p = s.power_per_user_w * std::norm(g(u, j));
                if (u == target) {
                    sinr_out[u] += p;  // own stream: powers add non-coherently
                } else {
                    interference[u] += p;
                }
            }
        }
    }
    for (int u = 0; u < n_ue; ++u) {
        sinr_out[u] /= (interference[u] + noise_w);
    }
}

double compute_sinr(int ue, std::span<const RbRuStreams> streams, double noise_w) {
    int n_ue = ue + 1;
    for (const RbRuStreams& s : streams) {
        n_ue = std::max(n_ue, static_cast<int>(s.gains->rows()));
    }
    std::vector<double> sinr(static_cast<std::size_t>(n_ue), 0.0);
    accumulate_rb_sinr(streams, noise_w, sinr);
    return sinr[ue];
}

double ue_tti_bits(std::span<const double> sinr_per_rb, std::span<const std::uint8_t> served_mask,
                   const Carrier& carrier, double se_cap_bps_hz) {
    if (!(se_cap_bps_hz > 0.0)) {
        throw std::invalid_argument("ue_tti_bits: se_cap must be > 0");
    }
    double se_sum = 0.0;
    for (std::size_t rb = 0; rb < sinr_per_rb.size(); ++rb) {
        if (!served_mask[rb]) {
            continue;
        }
        se_sum += std::min(std::log2(1.0 + sinr_per_rb[rb]), se_cap_bps_hz);
    }
    return carrier.rb_bandwidth_hz * carrier.tti_duration_s * se_sum;
}

}  // namespace scfsim
