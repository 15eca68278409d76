#include "drpa/supervisor.hpp"

#include <cmath>

#include "drpa/guidance.hpp"

namespace drpa {

double variation_measure(const PredictedPath& path, int tau_monitor) {
    const int T = static_cast<int>(path.size()) - 1;
    const Vec2 anchor = path[tau_monitor].position();
    double sum = 0.0;
    for (int tau = tau_monitor; tau <= T; ++tau) {
        sum += (anchor - path[tau].position()).norm();
    }
    return sum / static_cast<double>(T - tau_monitor + 1);
}

std::optional<Vec2> detect_local_minimum(const PredictedPath& path,
                                         const DrpaParams& drpa) {
    if (variation_measure(path, drpa.tau_monitor) >= drpa.r_thres) return std::nullopt;
    const int T = static_cast<int>(path.size()) - 1;
    Vec2 mean{};
    for (int tau = drpa.tau_monitor; tau <= T; ++tau) {
        mean += path[tau].position();
    }
    return mean / static_cast<double>(T - drpa.tau_monitor + 1);
}

bool passage_detected(Vec2 p_current, Vec2 p_min, Vec2 p_target, double d_margin) {
    const Vec2 dir = p_target - p_min;
    const double len = dir.norm();
    if (len < 1e-9) return false;
    const Vec2 plane_point = p_min + dir * (d_margin / len);
    return (p_target - p_current).dot(plane_point - p_current) < 0.0;
}

GuidanceMode advance_mode(const GuidanceMode& mode, const PredictedPath& path,
                          Vec2 p_current, Vec2 p_target, const DrpaParams& drpa) {
    if (!mode.is_detour()) {
        const std::optional<Vec2> p_min = detect_local_minimum(path, drpa);
        // A stall on the goal itself is convergence, not entrapment, and the
        // virtual-target direction would be noise-dominated there.
        if (p_min && (p_target - *p_min).norm() > drpa.goal_guard) {
            const std::optional<Vec2> p_vt =
                place_virtual_target(*p_min, p_target, drpa.d_vt);
            if (p_vt) return GuidanceMode::detour_mode(*p_min, *p_vt);
        }
        return mode;
    }
    if (passage_detected(p_current, mode.p_min, p_target, drpa.d_margin)) {
        return GuidanceMode::target_directed_mode();
    }
    return mode;
}

}  // namespace drpa
