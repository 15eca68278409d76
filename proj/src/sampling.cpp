#include "drpa/sampling.hpp"

#include <cmath>

namespace drpa {

namespace rng {

std::pair<double, double> normal_pair(std::uint64_t u1, std::uint64_t u2) {
    const double r = std::sqrt(-2.0 * std::log(to_unit_open(u1)));
    const double a = 2.0 * M_PI * to_unit(u2);
    return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace rng

void sample_gaussian_into(NoiseBatch& batch, int K, int T, DiagCov2 sigma_eps,
                          std::uint64_t seed) {
    batch.K = K;
    batch.T = T;
    batch.seed = seed;
    batch.data.resize(static_cast<std::size_t>(K) * T * 2);
    const double sv = std::sqrt(sigma_eps.vv);
    const double sw = std::sqrt(sigma_eps.ww);
    for (int k = 0; k < K; ++k) {
        const std::uint64_t key = rng::substream(seed, static_cast<std::uint64_t>(k));
        double* out = batch.row(k);
        for (int t = 0; t < T; ++t) {
            const auto [z0, z1] = rng::normal_pair(rng::draw(key, 2 * t),
                                                   rng::draw(key, 2 * t + 1));
            out[2 * t] = sv * z0;
            out[2 * t + 1] = sw * z1;
        }
    }
}

void sample_nln_into(NoiseBatch& batch, int K, int T, DiagCov2 sigma_eps,
                     const NlnParams& nln, std::uint64_t seed) {
    batch.K = K;
    batch.T = T;
    batch.seed = seed;
    batch.data.resize(static_cast<std::size_t>(K) * T * 2);
    const double sv = std::sqrt(sigma_eps.vv);
    const double sw = std::sqrt(sigma_eps.ww);
    for (int k = 0; k < K; ++k) {
        const std::uint64_t key = rng::substream(seed, static_cast<std::uint64_t>(k));
        double* out = batch.row(k);
        for (int t = 0; t < T; ++t) {
            // Draws 4t..4t+3: one pair for the normal factor, one for the
            // lognormal exponent.
            const auto [z0, z1] = rng::normal_pair(rng::draw(key, 4 * t),
                                                   rng::draw(key, 4 * t + 1));
            const auto [g0, g1] = rng::normal_pair(rng::draw(key, 4 * t + 2),
                                                   rng::draw(key, 4 * t + 3));
            out[2 * t] = sv * z0 * std::exp(nln.mu_v + nln.sigma_v * g0);
            out[2 * t + 1] = sw * z1 * std::exp(nln.mu_omega + nln.sigma_omega * g1);
        }
    }
}

NoiseBatch sample_gaussian(int K, int T, DiagCov2 sigma_eps, std::uint64_t seed) {
    NoiseBatch batch;
    sample_gaussian_into(batch, K, T, sigma_eps, seed);
    return batch;
}

NoiseBatch sample_nln(int K, int T, DiagCov2 sigma_eps, const NlnParams& nln,
                      std::uint64_t seed) {
    NoiseBatch batch;
    sample_nln_into(batch, K, T, sigma_eps, nln, seed);
    return batch;
}

}  // namespace drpa
