#include "drpa/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace drpa {

Control clamp_control(Control u, const MppiParams& params) {
    return {std::clamp(u.v, params.v_bounds.lo, params.v_bounds.hi),
            std::clamp(u.omega, params.omega_bounds.lo, params.omega_bounds.hi)};
}

State step(const State& x, Control u, double dt) {
    State next;
    next.x = x.x + u.v * std::cos(x.theta) * dt;
    next.y = x.y + u.v * std::sin(x.theta) * dt;
    next.theta = wrap_angle(x.theta + u.omega * dt);
    return next;
}

PredictedPath propagate(const State& x0, const ControlSequence& seq,
                        const MppiParams& params) {
    PredictedPath path;
    path.reserve(seq.size() + 1);
    path.push_back(x0);
    State x = x0;
    for (const Control& u : seq) {
        x = step(x, clamp_control(u, params), params.dt);
        path.push_back(x);
    }
    return path;
}

}  // namespace drpa
