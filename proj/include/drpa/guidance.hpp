#pragma once

#include <optional>

#include "drpa/core.hpp"
#include "drpa/world.hpp"

namespace drpa {

// Everything the detour-inducing guidance function needs.
// Invariant: ||p_vt - p_min|| == d_vt (within 1e-9) and 0 < w_rep < 1.
struct DetourContext {
    Vec2 p_min;
    Vec2 p_vt;
    double w_rep = 0.7;
    double d_vt = 10.0;
};

// Euclidean distance to the target position.
inline double target_guidance(Vec2 p, Vec2 p_target) { return (p_target - p).norm(); }

// Virtual target at distance d_vt from p_min toward p_target.
// nullopt when p_target is within 1e-9 m of p_min (direction undefined).
std::optional<Vec2> place_virtual_target(Vec2 p_min, Vec2 p_target, double d_vt);

// ||p_vt - p|| - w_rep * ||p_min - p||. Attraction to the virtual target,
// repulsion from the detected local minimum.
inline double detour_guidance(Vec2 p, const DetourContext& ctx) {
    return (ctx.p_vt - p).norm() - ctx.w_rep * (ctx.p_min - p).norm();
}

// Gradient of detour_guidance. nullopt within 1e-9 m of p_min or p_vt,
// where the function is not differentiable.
std::optional<Vec2> detour_gradient(Vec2 p, const DetourContext& ctx);

// Radius of the repulsive zone on the hyperplane through p_min perpendicular
// to (p_vt - p_min): d_vt * sqrt(w_rep^2 / (1 - w_rep^2)).
double repulsion_radius(double w_rep, double d_vt);

// Terminal cost: collision indicator plus the mode-selected guidance term.
double terminal_cost(const State& state_T, const World& world, Vec2 p_target,
                     const GuidanceMode& mode, const MppiParams& params, double w_rep);

}  // namespace drpa
