#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

namespace scfsim::rng {

// SplitMix64 output function (Stafford mix13). Statistically solid for
// simulation use and O(1) to seed, which matters because the engine opens
// one stream per (tti, rb, ru, ue) tuple.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace detail {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t absorb(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (v + kGolden + (h << 6) + (h >> 2)));
}
}  // namespace detail

// Derives the initial state of a named stream from a root seed, a label and
// up to a handful of integer indices. Every draw in the simulator is
// addressable as (seed, label, indices...), independent of evaluation order.
template <typename... Idx>
constexpr std::uint64_t stream_key(std::uint64_t seed, std::string_view label, Idx... idx) {
    std::uint64_t h = detail::absorb(mix64(seed), fnv1a64(label));
    ((h = detail::absorb(h, static_cast<std::uint64_t>(idx))), ...);
    return h;
}

// Counter-based generator: state advances by a fixed odd gamma, outputs are
// the SplitMix64 mix of the counter. Cheap to construct, no warm-up.
class Stream {
  public:
    explicit Stream(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() { return mix64(state_ += detail::kGolden); }

    // uniform on [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // standard normal via the Marsaglia polar method (second value cached)
    double next_normal();

    // fills out with i.i.d. circularly-symmetric complex Gaussian entries of
    // unit variance (E|z|^2 = 1)
    void fill_cn(std::span<std::complex<double>> out);

  private:
    std::uint64_t state_;
    double pending_ = 0.0;
    bool has_pending_ = false;
};

template <typename... Idx>
Stream substream(std::uint64_t seed, std::string_view label, Idx... idx) {
    return Stream(stream_key(seed, label, idx...));
}

}  // namespace scfsim::rng
