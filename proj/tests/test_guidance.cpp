#include <doctest.h>

#include <cmath>

#include "drpa/certify.hpp"
#include "drpa/guidance.hpp"
#include "drpa/sampling.hpp"
#include "drpa/scenario.hpp"

using namespace drpa;

namespace {

DetourContext axis_context() {
    // p_min at the origin, virtual target 10 m toward +x.
    return DetourContext{{0, 0}, {10, 0}, 0.7, 10.0};
}

Vec2 rotate(Vec2 v, double angle) {
    return {v.x * std::cos(angle) - v.y * std::sin(angle),
            v.x * std::sin(angle) + v.y * std::cos(angle)};
}

}  // namespace

TEST_SUITE("guidance") {

TEST_CASE("target_guidance is the Euclidean distance") {
    CHECK(target_guidance({1, 2}, {1, 2}) == 0.0);
    CHECK(target_guidance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(target_guidance({-1, -1}, {2, 3}) == doctest::Approx(5.0));
}

TEST_CASE("place_virtual_target walks d_vt toward the target") {
    auto a = place_virtual_target({0, 0}, {20, 0}, 10.0);
    REQUIRE(a.has_value());
    CHECK(a->x == doctest::Approx(10.0));
    CHECK(a->y == doctest::Approx(0.0));

    // May overshoot the real target.
    auto b = place_virtual_target({0, 0}, {0, 5}, 10.0);
    REQUIRE(b.has_value());
    CHECK(b->x == doctest::Approx(0.0));
    CHECK(b->y == doctest::Approx(10.0));

    auto c = place_virtual_target({1, 1}, {4, 5}, 10.0);
    REQUIRE(c.has_value());
    CHECK(c->x == doctest::Approx(7.0));
    CHECK(c->y == doctest::Approx(9.0));

    CHECK(!place_virtual_target({2, 2}, {2, 2}, 10.0).has_value());
}

TEST_CASE("detour_guidance values") {
    const DetourContext ctx = axis_context();
    CHECK(detour_guidance(ctx.p_vt, ctx) == doctest::Approx(-7.0));
    CHECK(detour_guidance(ctx.p_min, ctx) == doctest::Approx(10.0));
    CHECK(detour_guidance({5, 0}, ctx) == doctest::Approx(1.5));
}

TEST_CASE("detour_gradient closed form and kink handling") {
    const DetourContext ctx = axis_context();
    auto g = detour_gradient({5, 0}, ctx);
    REQUIRE(g.has_value());
    CHECK(g->x == doctest::Approx(-1.7));
    CHECK(g->y == doctest::Approx(0.0));

    CHECK(!detour_gradient(ctx.p_min, ctx).has_value());
    CHECK(!detour_gradient(ctx.p_vt, ctx).has_value());
}

TEST_CASE("outward derivative on the perpendicular is nonnegative inside the radius") {
    const DetourContext ctx = axis_context();
    const Vec2 p_n{0, 1};  // 1 m along the perpendicular, well inside ~9.8 m
    const auto g = detour_gradient(p_n, ctx);
    REQUIRE(g.has_value());
    // -grad has nonnegative outward component, i.e. grad . -(p_n - p_min) <= 0.
    CHECK(g->dot(Vec2{0, 0} - (p_n - ctx.p_min)) >= 0.0);

    const Vec2 p_far{0, 20};  // beyond the repulsion radius
    const auto g_far = detour_gradient(p_far, ctx);
    REQUIRE(g_far.has_value());
    CHECK((Vec2{0, 0} - *g_far).dot(p_far - ctx.p_min) < 0.0);
}

TEST_CASE("repulsion_radius closed form") {
    CHECK(repulsion_radius(0.7, 10.0) == doctest::Approx(9.802).epsilon(1e-4));
    CHECK(repulsion_radius(1e-9, 10.0) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(repulsion_radius(1.0 / std::sqrt(2.0), 10.0) == doctest::Approx(10.0));
}

TEST_CASE("terminal_cost combines collision and the selected guidance") {
    Polygon square{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    const World world({square}, Rect{{-20, -20}, {20, 20}});
    MppiParams params;
    params.w_obst = 1e3;
    params.w_guidance = 1.0;
    const GuidanceMode target_mode;

    // Free space exactly at the target.
    CHECK(terminal_cost({10, 10, 0}, world, {10, 10}, target_mode, params, 0.7) == 0.0);
    // Inside the obstacle while the guidance term is zero.
    CHECK(terminal_cost({0, 0, 0}, world, {0, 0}, target_mode, params, 0.7) == 1000.0);
    // Free space, pure distance.
    CHECK(terminal_cost({5, 5, 0}, world, {8, 9}, target_mode, params, 0.7) ==
          doctest::Approx(5.0));

    // Detour mode selects the detour guidance.
    const GuidanceMode detour = GuidanceMode::detour_mode({4, 4}, {14, 4});
    CHECK(terminal_cost({14, 4, 0}, world, {99, 99}, detour, params, 0.7) ==
          doctest::Approx(-7.0));
}

TEST_CASE("detour_guidance is invariant under rigid motions") {
    rng::SplitMix64 gen(13);
    for (int i = 0; i < 500; ++i) {
        DetourContext ctx;
        ctx.w_rep = gen.uniform(0.05, 0.95);
        ctx.d_vt = gen.uniform(1.0, 15.0);
        ctx.p_min = {gen.uniform(-10, 10), gen.uniform(-10, 10)};
        const double dir = gen.uniform(0, 2 * M_PI);
        ctx.p_vt = ctx.p_min + rotate({ctx.d_vt, 0}, dir);
        const Vec2 p{gen.uniform(-20, 20), gen.uniform(-20, 20)};
        const double before = detour_guidance(p, ctx);

        const double angle = gen.uniform(0, 2 * M_PI);
        const Vec2 shift{gen.uniform(-50, 50), gen.uniform(-50, 50)};
        DetourContext moved = ctx;
        moved.p_min = rotate(ctx.p_min, angle) + shift;
        moved.p_vt = rotate(ctx.p_vt, angle) + shift;
        const double after = detour_guidance(rotate(p, angle) + shift, moved);
        CHECK(after == doctest::Approx(before).epsilon(1e-9));
    }
}

TEST_CASE("certification suites pass at reduced scale") {
    CHECK(certify_detour_minimum(8, 2000, 77).pass);
    CHECK(certify_repulsion_boundary(8, 77).pass);
    CHECK(certify_gradient(8, 250, 77).pass);
}

}  // TEST_SUITE
