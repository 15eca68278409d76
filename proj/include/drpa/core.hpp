#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drpa/geometry.hpp"

namespace drpa {

// Robot pose. theta is stored wrapped to (-pi, pi].
struct State {
    double x = 0.0;      // m
    double y = 0.0;      // m
    double theta = 0.0;  // rad

    constexpr Vec2 position() const { return {x, y}; }
    constexpr bool operator==(const State&) const = default;
};

// Control input of the differential-drive model.
struct Control {
    double v = 0.0;      // m/s
    double omega = 0.0;  // rad/s

    constexpr bool operator==(const Control&) const = default;
};

// Length equals the horizon T of the owning solver.
using ControlSequence = std::vector<Control>;

// T+1 states; index 0 is the state the rollout started from.
using PredictedPath = std::vector<State>;

// Diagonal 2x2 covariance over (v, omega) noise. Entries are variances.
struct DiagCov2 {
    double vv = 0.0;
    double ww = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct MppiParams {
    int K = 10000;                      // rollouts per cycle
    int T = 50;                         // horizon steps
    double lambda = 10.0;               // softmax temperature
    double gamma = 0.1;                 // control-cost weight, 0 <= gamma <= lambda
    DiagCov2 sigma_eps{0.5, 0.5};       // sampling covariance (variances)
    double dt = 0.1;                    // s
    Interval v_bounds{-2.0, 2.0};       // m/s
    Interval omega_bounds{-1.5, 1.5};   // rad/s
    double w_obst = 1.0e4;              // collision indicator weight
    double w_guidance = 100.0;          // terminal guidance weight
};

struct DrpaParams {
    int tau_monitor = 40;     // start index of the monitoring window, in [0, T]
    double r_thres = 0.2;     // m, local-minimum detection threshold
    double d_vt = 10.0;       // m, virtual-target distance
    double d_margin = 0.25;   // m, passage-detection margin
    double w_rep = 0.7;       // repulsion weight, in (0, 1)
    // Detections whose p_min lies within this radius of the target are
    // ignored: a predicted trajectory parked on the goal is convergence.
    // Without this the monitoring window reaches the goal several seconds
    // before the robot and lures it onto a virtual target placed beyond.
    double goal_guard = 2.0;  // m
};

// Guidance state machine value. p_min/p_vt are meaningful only in detour mode,
// where ||p_vt - p_min|| equals the d_vt used at the switch.
struct GuidanceMode {
    enum class Kind { target_directed, detour_inducing };

    Kind kind = Kind::target_directed;
    Vec2 p_min{};
    Vec2 p_vt{};

    static GuidanceMode target_directed_mode() { return {}; }
    static GuidanceMode detour_mode(Vec2 p_min, Vec2 p_vt) {
        return {Kind::detour_inducing, p_min, p_vt};
    }
    bool is_detour() const { return kind == Kind::detour_inducing; }
    bool operator==(const GuidanceMode&) const = default;
};

// First violated parameter invariant.
struct InvalidParam {
    std::string field;
    std::string reason;
};

// Returns the first violated invariant, or nullopt when both bundles are valid.
std::optional<InvalidParam> validate(const MppiParams& mppi, const DrpaParams& drpa);

// theta mod 2*pi mapped into (-pi, pi]. Idempotent.
double wrap_angle(double theta);

}  // namespace drpa
