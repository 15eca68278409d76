#include "drpa/certify.hpp"

#include <cmath>
#include <sstream>

#include "drpa/sampling.hpp"

namespace drpa {

namespace {

constexpr double kExclusion = 1e-6;      // m, non-differentiable neighborhoods
constexpr double kFdExclusion = 0.05;    // m, where finite differences degrade
constexpr double kFdStep = 1e-6;         // m

Vec2 sample_in_disc(rng::SplitMix64& gen, Vec2 center, double radius) {
    const double r = radius * std::sqrt(gen.uniform());
    const double a = 2.0 * M_PI * gen.uniform();
    return center + Vec2{r * std::cos(a), r * std::sin(a)};
}

}  // namespace

std::vector<DetourContext> certify_configs(int n_configs, std::uint64_t seed) {
    constexpr double kWreps[4] = {0.3, 0.5, 0.7, 0.9};
    std::vector<DetourContext> configs;
    configs.reserve(n_configs);
    for (int i = 0; i < n_configs; ++i) {
        rng::SplitMix64 gen(rng::substream(seed, static_cast<std::uint64_t>(i)));
        DetourContext ctx;
        ctx.w_rep = kWreps[i % 4];
        ctx.d_vt = gen.uniform(2.0, 15.0);
        ctx.p_min = {gen.uniform(-10.0, 10.0), gen.uniform(-10.0, 10.0)};
        const double angle = gen.uniform(0.0, 2.0 * M_PI);
        const double dist = gen.uniform(1.0, 30.0);
        const Vec2 target = ctx.p_min + Vec2{dist * std::cos(angle), dist * std::sin(angle)};
        ctx.p_vt = *place_virtual_target(ctx.p_min, target, ctx.d_vt);
        configs.push_back(ctx);
    }
    return configs;
}

CertifyReport certify_detour_minimum(int n_configs, int points_per_config,
                                     std::uint64_t seed) {
    const auto configs = certify_configs(n_configs, seed);
    long checked = 0;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const DetourContext& ctx = configs[c];
        const double g_at_vt = detour_guidance(ctx.p_vt, ctx);
        rng::SplitMix64 gen(rng::substream(seed ^ 0x5eedULL, c));
        for (int i = 0; i < points_per_config; ++i) {
            const Vec2 p = sample_in_disc(gen, ctx.p_min, 3.0 * ctx.d_vt);
            if ((p - ctx.p_min).norm() < kExclusion || (p - ctx.p_vt).norm() < kExclusion)
                continue;
            ++checked;
            if (!(detour_guidance(p, ctx) > g_at_vt)) {
                std::ostringstream out;
                out << "value check failed at config " << c << " point (" << p.x << ", "
                    << p.y << ")";
                return {false, out.str()};
            }
            const auto grad = detour_gradient(p, ctx);
            if (!grad || !((Vec2{0, 0} - *grad).dot(ctx.p_vt - p) > 0.0)) {
                std::ostringstream out;
                out << "descent check failed at config " << c << " point (" << p.x
                    << ", " << p.y << ")";
                return {false, out.str()};
            }
        }
    }
    std::ostringstream out;
    out << "virtual target is the strict minimum with descent toward it at " << checked
        << " sampled points across " << n_configs << " configurations";
    return {true, out.str()};
}

CertifyReport certify_repulsion_boundary(int n_configs, std::uint64_t seed, double tol) {
    const auto configs = certify_configs(n_configs, seed);
    double worst = 0.0;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const DetourContext& ctx = configs[c];
        const Vec2 axis = (ctx.p_vt - ctx.p_min) / ctx.d_vt;
        const Vec2 normal{-axis.y, axis.x};

        auto outward = [&](double r) {
            const Vec2 p = ctx.p_min + normal * r;
            const Vec2 grad = *detour_gradient(p, ctx);
            return (Vec2{0, 0} - grad).dot(p - ctx.p_min);
        };

        const double expected = repulsion_radius(ctx.w_rep, ctx.d_vt);
        double lo = 1e-6;  // clear of the non-differentiable neighborhood of p_min
        double hi = 2.0 * expected + 1.0;
        if (!(outward(lo) > 0.0) || !(outward(hi) < 0.0)) {
            std::ostringstream out;
            out << "bisection bracket invalid at config " << c;
            return {false, out.str()};
        }
        for (int iter = 0; iter < 200 && (hi - lo) > 0.25 * tol; ++iter) {
            const double mid = 0.5 * (lo + hi);
            (outward(mid) >= 0.0 ? lo : hi) = mid;
        }
        const double found = 0.5 * (lo + hi);
        worst = std::max(worst, std::abs(found - expected));
        if (std::abs(found - expected) > tol) {
            std::ostringstream out;
            out << "config " << c << ": bisection radius " << found
                << " vs closed form " << expected;
            return {false, out.str()};
        }
    }
    std::ostringstream out;
    out << "sign-change radius matches the closed form on " << n_configs
        << " configurations (worst gap " << worst << " m)";
    return {true, out.str()};
}

CertifyReport certify_gradient(int n_configs, int points_per_config, std::uint64_t seed,
                               double max_rel_err) {
    const auto configs = certify_configs(n_configs, seed);
    double worst = 0.0;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const DetourContext& ctx = configs[c];
        rng::SplitMix64 gen(rng::substream(seed ^ 0x97adULL, c));
        for (int i = 0; i < points_per_config; ++i) {
            const Vec2 p = sample_in_disc(gen, ctx.p_min, 3.0 * ctx.d_vt);
            if ((p - ctx.p_min).norm() < kFdExclusion ||
                (p - ctx.p_vt).norm() < kFdExclusion)
                continue;
            const Vec2 grad = *detour_gradient(p, ctx);
            const Vec2 fd{
                (detour_guidance({p.x + kFdStep, p.y}, ctx) -
                 detour_guidance({p.x - kFdStep, p.y}, ctx)) / (2.0 * kFdStep),
                (detour_guidance({p.x, p.y + kFdStep}, ctx) -
                 detour_guidance({p.x, p.y - kFdStep}, ctx)) / (2.0 * kFdStep)};
            const double rel = (grad - fd).norm() / grad.norm();
            worst = std::max(worst, rel);
        }
    }
    std::ostringstream out;
    out << "max relative error vs central differences: " << worst << " over "
        << n_configs << " configurations x " << points_per_config << " points";
    return {worst < max_rel_err, out.str()};
}

}  // namespace drpa
