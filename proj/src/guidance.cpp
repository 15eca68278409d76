#include "drpa/guidance.hpp"

#include <cmath>

namespace drpa {

namespace {
constexpr double kDegenerate = 1e-9;  // m
}

std::optional<Vec2> place_virtual_target(Vec2 p_min, Vec2 p_target, double d_vt) {
    const Vec2 dir = p_target - p_min;
    const double len = dir.norm();
    if (len < kDegenerate) return std::nullopt;
    return p_min + dir * (d_vt / len);
}

std::optional<Vec2> detour_gradient(Vec2 p, const DetourContext& ctx) {
    const double d_vt = (ctx.p_vt - p).norm();
    const double d_min = (ctx.p_min - p).norm();
    if (d_vt < kDegenerate || d_min < kDegenerate) return std::nullopt;
    return (p - ctx.p_vt) / d_vt - ctx.w_rep * ((p - ctx.p_min) / d_min);
}

double repulsion_radius(double w_rep, double d_vt) {
    return d_vt * std::sqrt(w_rep * w_rep / (1.0 - w_rep * w_rep));
}

double terminal_cost(const State& state_T, const World& world, Vec2 p_target,
                     const GuidanceMode& mode, const MppiParams& params, double w_rep) {
    const Vec2 p = state_T.position();
    double guidance;
    if (mode.is_detour()) {
        guidance = (mode.p_vt - p).norm() - w_rep * (mode.p_min - p).norm();
    } else {
        guidance = (p_target - p).norm();
    }
    return collision_cost(world, p, params.w_obst) + params.w_guidance * guidance;
}

}  // namespace drpa
