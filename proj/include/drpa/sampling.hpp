#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "drpa/core.hpp"

namespace drpa {

namespace rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer. Bijective, full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Key of the id-th substream of a seed. Substreams are mutually independent
// counter streams; draws within one are addressed by index, so generation
// order (and thread schedule) cannot change any value.
constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t id) {
    return mix64(mix64(seed + kGolden) + (id + 1) * kGolden);
}

// n-th 64-bit draw of a substream.
constexpr std::uint64_t draw(std::uint64_t key, std::uint64_t n) {
    return mix64(key + (n + 1) * kGolden);
}

// Uniform in [0, 1) from 53 high bits.
constexpr double to_unit(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

// Uniform in (0, 1]; safe under log().
constexpr double to_unit_open(std::uint64_t u) {
    return static_cast<double>((u >> 11) + 1) * 0x1.0p-53;
}

// Standard normal pair by Box-Muller from two 64-bit draws.
std::pair<double, double> normal_pair(std::uint64_t u1, std::uint64_t u2);

// Small sequential generator for scenario construction and tests.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}
    constexpr std::uint64_t next() { return mix64(state += kGolden); }
    double uniform() { return to_unit(next()); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace rng

// Lognormal factor parameters of the NLN mixture (Log-MPPI sampling).
// sigma_* are the standard deviations of the underlying normals.
struct NlnParams {
    double mu_v = -0.020;
    double mu_omega = -0.020;
    double sigma_v = 0.141;
    double sigma_omega = 0.141;
};

// K x T array of (v, omega) control-noise vectors.
struct NoiseBatch {
    int K = 0;
    int T = 0;
    std::uint64_t seed = 0;
    std::vector<double> data;  // layout [k][t][2]

    double* row(int k) { return data.data() + static_cast<std::size_t>(k) * T * 2; }
    const double* row(int k) const {
        return data.data() + static_cast<std::size_t>(k) * T * 2;
    }
    double eps_v(int k, int t) const { return row(k)[2 * t]; }
    double eps_omega(int k, int t) const { return row(k)[2 * t + 1]; }
};

// I.i.d. zero-mean Gaussian noise with per-dimension variance sigma_eps.
// Deterministic in (seed, K, T): per-rollout counter substreams keyed by (seed, k).
NoiseBatch sample_gaussian(int K, int T, DiagCov2 sigma_eps, std::uint64_t seed);

// NLN mixture: each entry is a zero-mean normal (variance sigma_eps) times an
// independent lognormal factor exp(mu + sigma * g), g ~ N(0,1).
NoiseBatch sample_nln(int K, int T, DiagCov2 sigma_eps, const NlnParams& nln,
                      std::uint64_t seed);

// In-place variants reusing the batch storage across control cycles.
void sample_gaussian_into(NoiseBatch& batch, int K, int T, DiagCov2 sigma_eps,
                          std::uint64_t seed);
void sample_nln_into(NoiseBatch& batch, int K, int T, DiagCov2 sigma_eps,
                     const NlnParams& nln, std::uint64_t seed);

}  // namespace drpa
