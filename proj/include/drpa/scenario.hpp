#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "drpa/core.hpp"
#include "drpa/world.hpp"

namespace drpa {

enum class QualitativeKind { short_rect, long_rect, u_shape };
enum class Convexity { convex, non_convex };

// One navigation task: world, endpoints, and the success contract.
struct Scenario {
    World world;
    State start;                  // heading points at the target
    Vec2 target;
    double time_limit = 30.0;     // s
    double success_radius = 0.5;  // m
    std::uint64_t seed = 0;
};

// The three hand-built obstacle courses. The obstacle is centered on and
// symmetric about the start-target segment: a 1 m rectangle, a 5 m-wide
// rectangle, or a 5 m-wide U shape whose 2 m cavity opens toward the start.
Scenario make_qualitative(QualitativeKind kind);

// Checkered random world: a 30 m x 30 m region split into grid_n x grid_n
// cells, obstacles in alternating cells. Convex cells hold the hull of points
// sampled on the cell edges; non-convex cells hold the union of two such
// hulls. Deterministic in seed.
Scenario make_random_grid(int grid_n, Convexity convexity, std::uint64_t seed);

// Start uniform on the line x = -18, target on x = +18, y in [-12, 12],
// heading toward the target.
std::pair<State, Vec2> sample_start_target(std::uint64_t seed);

std::string scenario_to_json_string(const Scenario& scenario, int indent = -1);
Scenario scenario_from_json_string(const std::string& text);

}  // namespace drpa
