#pragma once

#include <optional>

#include "drpa/core.hpp"

namespace drpa {

// Mean distance of the monitored tail positions from the position at
// tau_monitor (the tau_monitor term itself contributes 0 and is counted):
//   f = 1/(T - tau_monitor + 1) * sum_{tau} ||p*_{tau_monitor} - p*_tau||.
double variation_measure(const PredictedPath& path, int tau_monitor);

// If the variation measure falls below r_thres, the estimated local minimum:
// the mean of all monitored positions. Otherwise nullopt.
std::optional<Vec2> detect_local_minimum(const PredictedPath& path,
                                         const DrpaParams& drpa);

// Margin-offset hyperplane test: true iff the robot has passed the plane
// through p_min + d_margin * unit(p_target - p_min), i.e.
//   (p_target - p_current) . (p_min + margin - p_current) < 0   (strict).
// Degenerate direction (p_target within 1e-9 of p_min) yields false.
bool passage_detected(Vec2 p_current, Vec2 p_min, Vec2 p_target, double d_margin);

// Two-state machine of the control loop, evaluated once per cycle:
//  - target-directed + detection fires -> detour mode (p_min frozen, virtual
//    target placed at d_vt toward p_target);
//  - detour + passage detected -> target-directed;
//  - otherwise unchanged. Detection runs only in target-directed mode,
//    passage only in detour mode.
// A degenerate virtual-target direction aborts the switch.
GuidanceMode advance_mode(const GuidanceMode& mode, const PredictedPath& path,
                          Vec2 p_current, Vec2 p_target, const DrpaParams& drpa);

}  // namespace drpa
