#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drpa/guidance.hpp"

namespace drpa {

struct CertifyReport {
    bool pass = false;
    std::string detail;
};

// Random (p_min, p_target, d_vt, w_rep) configurations used by the suites;
// w_rep cycles through {0.3, 0.5, 0.7, 0.9}.
std::vector<DetourContext> certify_configs(int n_configs, std::uint64_t seed);

// The virtual target is the strict minimum of the detour guidance, and the
// negative gradient points toward it, at every sampled differentiable point
// (points within 1e-6 m of p_min or p_vt are excluded).
CertifyReport certify_detour_minimum(int n_configs, int points_per_config,
                                     std::uint64_t seed);

// The sign change of the outward derivative along the perpendicular through
// p_min, found by bisection, matches repulsion_radius to tol meters.
CertifyReport certify_repulsion_boundary(int n_configs, std::uint64_t seed,
                                         double tol = 1e-6);

// detour_gradient agrees with central finite differences of detour_guidance.
CertifyReport certify_gradient(int n_configs, int points_per_config,
                               std::uint64_t seed, double max_rel_err = 1e-6);

}  // namespace drpa
