#include "drpa/core.hpp"

#include <cmath>

namespace drpa {

namespace {

bool finite(double v) { return std::isfinite(v); }

}  // namespace

std::optional<InvalidParam> validate(const MppiParams& mppi, const DrpaParams& drpa) {
    if (mppi.K < 1) return InvalidParam{"K", "must be >= 1"};
    if (mppi.T < 2) return InvalidParam{"T", "must be >= 2"};
    if (!finite(mppi.lambda) || mppi.lambda <= 0.0)
        return InvalidParam{"lambda", "must be > 0"};
    if (!finite(mppi.gamma) || mppi.gamma < 0.0 || mppi.gamma > mppi.lambda)
        return InvalidParam{"gamma", "must satisfy 0 <= gamma <= lambda"};
    if (!finite(mppi.sigma_eps.vv) || mppi.sigma_eps.vv <= 0.0)
        return InvalidParam{"sigma_eps.vv", "variance must be > 0"};
    if (!finite(mppi.sigma_eps.ww) || mppi.sigma_eps.ww <= 0.0)
        return InvalidParam{"sigma_eps.ww", "variance must be > 0"};
    if (!finite(mppi.dt) || mppi.dt <= 0.0) return InvalidParam{"dt", "must be > 0"};
    if (!finite(mppi.v_bounds.lo) || !finite(mppi.v_bounds.hi) ||
        mppi.v_bounds.lo > mppi.v_bounds.hi)
        return InvalidParam{"v_bounds", "must be a nonempty closed interval"};
    if (!finite(mppi.omega_bounds.lo) || !finite(mppi.omega_bounds.hi) ||
        mppi.omega_bounds.lo > mppi.omega_bounds.hi)
        return InvalidParam{"omega_bounds", "must be a nonempty closed interval"};
    if (!finite(mppi.w_obst) || mppi.w_obst <= 0.0)
        return InvalidParam{"w_obst", "must be > 0"};
    if (!finite(mppi.w_guidance) || mppi.w_guidance <= 0.0)
        return InvalidParam{"w_guidance", "must be > 0"};

    if (drpa.tau_monitor < 0 || drpa.tau_monitor > mppi.T)
        return InvalidParam{"tau_monitor", "must be in [0, T]"};
    if (!finite(drpa.r_thres) || drpa.r_thres <= 0.0)
        return InvalidParam{"r_thres", "must be > 0"};
    if (!finite(drpa.d_vt) || drpa.d_vt <= 0.0) return InvalidParam{"d_vt", "must be > 0"};
    if (!finite(drpa.d_margin) || drpa.d_margin < 0.0)
        return InvalidParam{"d_margin", "must be >= 0"};
    if (!finite(drpa.w_rep) || drpa.w_rep <= 0.0 || drpa.w_rep >= 1.0)
        return InvalidParam{"w_rep", "must be in (0, 1)"};
    if (!finite(drpa.goal_guard) || drpa.goal_guard < 0.0)
        return InvalidParam{"goal_guard", "must be >= 0"};

    return std::nullopt;
}

double wrap_angle(double theta) {
    // remainder() lands in [-pi, pi]; fold the open end onto +pi.
    double r = std::remainder(theta, 2.0 * M_PI);
    return r <= -M_PI ? M_PI : r;
}

}  // namespace drpa
