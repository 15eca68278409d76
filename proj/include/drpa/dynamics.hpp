#pragma once

#include "drpa/core.hpp"

namespace drpa {

// Projects each input component onto its closed bound interval.
Control clamp_control(Control u, const MppiParams& params);

// One forward-Euler step of the differential-drive kinematics:
//   x' = x + [v cos(theta), v sin(theta), omega] * dt, theta' wrapped.
// Expects an already clamped input.
State step(const State& x, Control u, double dt);

// Iterated step with clamping applied to every command.
// Returns T+1 states, path[0] == x0.
PredictedPath propagate(const State& x0, const ControlSequence& seq,
                        const MppiParams& params);

}  // namespace drpa
