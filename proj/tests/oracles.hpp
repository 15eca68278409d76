#pragma once

// Independent reference implementations used as test oracles. These must not
// share code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "drpa/core.hpp"
#include "drpa/world.hpp"

namespace oracles {

// Point-in-polygon by crossing number (odd-even rule) with an explicit
// boundary check. Different algorithm family than the library's winding test.
inline bool pip_crossing(const drpa::Polygon& poly, drpa::Vec2 p) {
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const drpa::Vec2 a = poly.vertices[i];
        const drpa::Vec2 b = poly.vertices[(i + 1) % n];
        const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (cross == 0.0) {
            const double dot = (b.x - a.x) * (p.x - a.x) + (b.y - a.y) * (p.y - a.y);
            const double len_sq = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
            if (dot >= 0.0 && dot <= len_sq) return true;
        }
    }
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const drpa::Vec2 a = poly.vertices[i];
        const drpa::Vec2 b = poly.vertices[(i + 1) % n];
        if ((a.y <= p.y) != (b.y <= p.y)) {
            const double x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_at) ++crossings;
        }
    }
    return crossings % 2 == 1;
}

inline bool world_contains_ref(const drpa::World& world, drpa::Vec2 p) {
    for (const drpa::Polygon& poly : world.polygons()) {
        if (pip_crossing(poly, p)) return true;
    }
    return false;
}

inline double dist_to_segment(drpa::Vec2 p, drpa::Vec2 a, drpa::Vec2 b) {
    const drpa::Vec2 ab = b - a;
    const double len_sq = ab.norm_sq();
    double t = len_sq > 0.0 ? (p - a).dot(ab) / len_sq : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

inline double dist_to_any_edge(const drpa::World& world, drpa::Vec2 p) {
    double best = std::numeric_limits<double>::infinity();
    for (const drpa::Polygon& poly : world.polygons()) {
        const std::size_t n = poly.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            best = std::min(best, dist_to_segment(p, poly.vertices[i],
                                                  poly.vertices[(i + 1) % n]));
        }
    }
    return best;
}

// Straight-line re-implementation of the rollout cost-to-go: simulate the
// perturbed sequence through the kinematics, accumulate the running collision
// indicator on intermediate states, the terminal cost at the end, and the
// control term gamma * u_hat' Sigma^-1 (u_hat + eps) every step.
inline double rollout_cost_ref(const drpa::State& x0,
                               const drpa::ControlSequence& u_hat,
                               std::span<const double> eps, const drpa::World& world,
                               drpa::Vec2 target, const drpa::MppiParams& mp) {
    double J = 0.0;
    double x = x0.x, y = x0.y, th = x0.theta;
    const int T = static_cast<int>(u_hat.size());
    for (int t = 0; t < T; ++t) {
        const double vv = u_hat[t].v + eps[2 * t];
        const double vw = u_hat[t].omega + eps[2 * t + 1];
        const double cv = std::min(std::max(vv, mp.v_bounds.lo), mp.v_bounds.hi);
        const double cw =
            std::min(std::max(vw, mp.omega_bounds.lo), mp.omega_bounds.hi);
        x = x + cv * std::cos(th) * mp.dt;
        y = y + cv * std::sin(th) * mp.dt;
        th = drpa::wrap_angle(th + cw * mp.dt);
        if (t == T - 1) {
            double terminal = world_contains_ref(world, {x, y}) ? mp.w_obst : 0.0;
            terminal += mp.w_guidance * std::hypot(target.x - x, target.y - y);
            J += terminal;
        } else if (world_contains_ref(world, {x, y})) {
            J += mp.w_obst;
        }
        J += mp.gamma * (u_hat[t].v * vv / mp.sigma_eps.vv +
                         u_hat[t].omega * vw / mp.sigma_eps.ww);
    }
    return J;
}

}  // namespace oracles
