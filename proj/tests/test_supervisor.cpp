#include <doctest.h>

#include <cmath>

#include "drpa/sampling.hpp"
#include "drpa/supervisor.hpp"

using namespace drpa;

namespace {

// Path whose first segment walks toward `tail_start` and whose monitored tail
// is supplied explicitly. T = 50, tau_monitor = 40 -> 11 monitored points.
PredictedPath path_with_tail(const std::vector<Vec2>& tail) {
    PredictedPath path;
    const int T = 50;
    const int tau_monitor = T + 1 - static_cast<int>(tail.size());
    for (int i = 0; i < tau_monitor; ++i) {
        const double s = static_cast<double>(i) / tau_monitor;
        path.push_back({tail.front().x * s, tail.front().y * s, 0.0});
    }
    for (const Vec2& p : tail) path.push_back({p.x, p.y, 0.0});
    return path;
}

Vec2 rotate(Vec2 v, double angle) {
    return {v.x * std::cos(angle) - v.y * std::sin(angle),
            v.x * std::sin(angle) + v.y * std::cos(angle)};
}

}  // namespace

TEST_SUITE("supervisor") {

TEST_CASE("variation_measure of a stationary tail is zero") {
    const PredictedPath path = path_with_tail(std::vector<Vec2>(11, Vec2{4, 2}));
    CHECK(variation_measure(path, 40) == 0.0);
}

TEST_CASE("variation_measure of a straight 1 m/s tail is 0.5") {
    std::vector<Vec2> tail;
    for (int i = 0; i <= 10; ++i) tail.push_back({3.0 + 0.1 * i, 0.0});
    const PredictedPath path = path_with_tail(tail);
    CHECK(variation_measure(path, 40) == doctest::Approx(0.5));
}

TEST_CASE("variation_measure of a two-point oscillation stays under r_thres") {
    std::vector<Vec2> tail;
    for (int i = 0; i <= 10; ++i) tail.push_back({i % 2 == 0 ? 0.0 : 0.1, 0.0});
    const PredictedPath path = path_with_tail(tail);
    const double f = variation_measure(path, 40);
    CHECK(f == doctest::Approx(0.5 / 11.0));
    CHECK(f <= 0.1);
    CHECK(f < 0.2);  // triggers detection at the default threshold
}

TEST_CASE("detect_local_minimum returns the mean of the monitored tail") {
    DrpaParams drpa;

    auto stationary = detect_local_minimum(
        path_with_tail(std::vector<Vec2>(11, Vec2{4, 2})), drpa);
    REQUIRE(stationary.has_value());
    CHECK(stationary->x == doctest::Approx(4.0));
    CHECK(stationary->y == doctest::Approx(2.0));

    std::vector<Vec2> moving;
    for (int i = 0; i <= 10; ++i) moving.push_back({3.0 + 0.1 * i, 0.0});
    CHECK(!detect_local_minimum(path_with_tail(moving), drpa).has_value());

    std::vector<Vec2> slow;
    for (int i = 0; i <= 10; ++i) slow.push_back({0.01 * i, 0.0});
    auto detected = detect_local_minimum(path_with_tail(slow), drpa);
    REQUIRE(detected.has_value());
    CHECK(detected->x == doctest::Approx(0.05));
    CHECK(detected->y == doctest::Approx(0.0));
}

TEST_CASE("passage_detected margin hyperplane") {
    CHECK(passage_detected({5, 0}, {0, 0}, {10, 0}, 0.25));
    CHECK(!passage_detected({-1, 0}, {0, 0}, {10, 0}, 0.25));
    // Exactly on the offset plane: strict inequality says not yet passed.
    CHECK(!passage_detected({0.25, 0}, {0, 0}, {10, 0}, 0.25));
    // Degenerate direction is conservatively "no passage".
    CHECK(!passage_detected({1, 1}, {3, 3}, {3, 3}, 0.25));
}

TEST_CASE("advance_mode switches target -> detour on detection") {
    DrpaParams drpa;
    const Vec2 target{20, 2};
    const PredictedPath stuck = path_with_tail(std::vector<Vec2>(11, Vec2{4, 2}));
    const GuidanceMode mode =
        advance_mode(GuidanceMode{}, stuck, {0, 0}, target, drpa);
    REQUIRE(mode.is_detour());
    CHECK(mode.p_min.x == doctest::Approx(4.0));
    CHECK(mode.p_min.y == doctest::Approx(2.0));
    CHECK((mode.p_vt - mode.p_min).norm() == doctest::Approx(drpa.d_vt));
    // p_vt lies on the ray from p_min toward the target.
    const Vec2 dir = (target - mode.p_min) / (target - mode.p_min).norm();
    CHECK((mode.p_min + dir * drpa.d_vt - mode.p_vt).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("advance_mode reverts on passage and freezes p_min otherwise") {
    DrpaParams drpa;
    const Vec2 target{10, 0};
    const GuidanceMode detour = GuidanceMode::detour_mode({0, 0}, {10, 0});

    // Robot past the margin plane: back to target-directed.
    const PredictedPath idle = path_with_tail(std::vector<Vec2>(11, Vec2{5, 3}));
    CHECK(!advance_mode(detour, idle, {5, 0}, target, drpa).is_detour());

    // Stagnating prediction but no passage: mode (and p_min) unchanged.
    const GuidanceMode kept = advance_mode(detour, idle, {-2, 0}, target, drpa);
    REQUIRE(kept.is_detour());
    CHECK(kept.p_min == detour.p_min);
    CHECK(kept.p_vt == detour.p_vt);
}

TEST_CASE("advance_mode aborts the switch when the minimum sits on the target") {
    DrpaParams drpa;
    const Vec2 target{4, 2};
    const PredictedPath stuck = path_with_tail(std::vector<Vec2>(11, Vec2{4, 2}));
    const GuidanceMode mode =
        advance_mode(GuidanceMode{}, stuck, {0, 0}, target, drpa);
    CHECK(!mode.is_detour());
}

TEST_CASE("no passage right after a switch when robot is on the far side") {
    rng::SplitMix64 gen(29);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 p_min{gen.uniform(-10, 10), gen.uniform(-10, 10)};
        const double angle = gen.uniform(0, 2 * M_PI);
        const double dist = gen.uniform(1.0, 30.0);
        const Vec2 target = p_min + rotate({dist, 0}, angle);
        const double d_margin = gen.uniform(0.0, 1.0);
        // Robot more than d_margin behind p_min, arbitrary lateral offset.
        const double back = -d_margin - gen.uniform(1e-6, 10.0);
        const double lateral = gen.uniform(-10, 10);
        const Vec2 u = (target - p_min) / dist;
        const Vec2 n{-u.y, u.x};
        const Vec2 p_current = p_min + u * back + n * lateral;
        CHECK(!passage_detected(p_current, p_min, target, d_margin));
    }
}

TEST_CASE("detection transforms covariantly under rigid motions") {
    DrpaParams drpa;
    rng::SplitMix64 gen(37);
    for (int i = 0; i < 200; ++i) {
        const Vec2 tail_point{gen.uniform(-5, 5), gen.uniform(-5, 5)};
        std::vector<Vec2> tail;
        for (int j = 0; j <= 10; ++j) {
            tail.push_back(tail_point +
                           Vec2{gen.uniform(-0.01, 0.01), gen.uniform(-0.01, 0.01)});
        }
        const PredictedPath path = path_with_tail(tail);
        const auto base = detect_local_minimum(path, drpa);
        REQUIRE(base.has_value());

        const double angle = gen.uniform(0, 2 * M_PI);
        const Vec2 shift{gen.uniform(-20, 20), gen.uniform(-20, 20)};
        PredictedPath moved;
        for (const State& s : path) {
            const Vec2 q = rotate(s.position(), angle) + shift;
            moved.push_back({q.x, q.y, s.theta});
        }
        const auto transformed = detect_local_minimum(moved, drpa);
        REQUIRE(transformed.has_value());
        const Vec2 expected = rotate(*base, angle) + shift;
        CHECK((*transformed - expected).norm() < 1e-9);
    }
}

}  // TEST_SUITE
