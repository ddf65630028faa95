#include "scfsim/rng.hpp"

#include <Eigen/Core>

#include <cmath>

namespace scfsim::rng {

double Stream::next_normal() {
    if (has_pending_) {
        has_pending_ = false;
        return pending_;
    }
    double v1;
    double v2;
    double s;
    do {
        v1 = 2.0 * next_unit() - 1.0;
        v2 = 2.0 * next_unit() - 1.0;
        s = v1 * v1 + v2 * v2;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    pending_ = v2 * f;
    has_pending_ = true;
    return v1 * f;
}

namespace {

constexpr double kToUnit = 0x1.0p-53;

inline double unit_at(std::uint64_t key, std::uint64_t draw) {
    return static_cast<double>(mix64(key + (draw + 1) * detail::kGolden) >> 11) * kToUnit;
}

}  // namespace

void Stream::fill_cn(std::span<std::complex<double>> out) {
    // Each entry owns a counter substream keyed off the parent state, so the
    // first polar attempt for a whole chunk has no loop-carried dependency
    // and vectorizes; rejected entries (about 21%) retry scalar within their
    // own substream. This loop dominates simulator runtime.
    constexpr int kChunk = 128;
    std::uint64_t keys[kChunk];
    double v1[kChunk];
    double v2[kChunk];
    double s[kChunk];
    double f[kChunk];

    const std::uint64_t base = state_;
    std::size_t done = 0;
    while (done < out.size()) {
        const int n = static_cast<int>(std::min<std::size_t>(kChunk, out.size() - done));
        for (int i = 0; i < n; ++i) {
            keys[i] = mix64(base + (done + i + 1) * detail::kGolden);
        }
        for (int i = 0; i < n; ++i) {
            v1[i] = 2.0 * unit_at(keys[i], 0) - 1.0;
            v2[i] = 2.0 * unit_at(keys[i], 1) - 1.0;
            s[i] = v1[i] * v1[i] + v2[i] * v2[i];
        }
        for (int i = 0; i < n; ++i) {
            std::uint64_t draw = 2;
            while (s[i] >= 1.0 || s[i] == 0.0) {
                v1[i] = 2.0 * unit_at(keys[i], draw) - 1.0;
                v2[i] = 2.0 * unit_at(keys[i], draw + 1) - 1.0;
                s[i] = v1[i] * v1[i] + v2[i] * v2[i];
                draw += 2;
            }
        }
        // component variance 1/2 so that E|z|^2 = 1
        Eigen::Map<Eigen::ArrayXd> fs(f, n);
        Eigen::Map<const Eigen::ArrayXd> ss(s, n);
        fs = (-ss.log() / ss).sqrt();
        for (int i = 0; i < n; ++i) {
            out[done + i] = std::complex<double>(v1[i] * f[i], v2[i] * f[i]);
        }
        done += n;
    }
    // single advance of the parent stream; entry substreams only ever see
    // double-mixed counters, so later direct draws cannot collide
    state_ += (out.size() + 1) * detail::kGolden;
}

}  // namespace scfsim::rng
