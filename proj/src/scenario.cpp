#include "drpa/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "drpa/sampling.hpp"
#include "json_detail.hpp"

namespace drpa {

namespace {

constexpr double kRegionHalf = 15.0;   // obstacle region is [-15, 15]^2
constexpr double kLineX = 18.0;        // designated start/target lines
constexpr double kLineHalfSpan = 12.0; // y range of the designated lines

double heading_toward(Vec2 from, Vec2 to) { return std::atan2(to.y - from.y, to.x - from.x); }

// Andrew's monotone chain; returns a CCW hull without collinear vertices.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Vec2> hull(2 * n);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (h >= 2 &&
               (hull[h - 1] - hull[h - 2]).cross(pts[i] - hull[h - 2]) <= 0.0)
            --h;
        hull[h++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = h + 1; i-- > 0;) {
        while (h >= lower &&
               (hull[h - 1] - hull[h - 2]).cross(pts[i] - hull[h - 2]) <= 0.0)
            --h;
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);
    return hull;
}

// Hull of 8 points sampled on the cell edges (2 per edge). Thin hulls below
// a tenth of the cell area are resampled.
Polygon edge_sampled_hull(const Rect& cell, std::uint64_t key) {
    const double min_area = 0.1 * cell.width() * cell.height();
    Polygon poly;
    for (std::uint64_t attempt = 0;; ++attempt) {
        rng::SplitMix64 gen(rng::substream(key, attempt));
        std::vector<Vec2> pts;
        pts.reserve(8);
        for (int i = 0; i < 2; ++i)
            pts.push_back({cell.min.x + gen.uniform() * cell.width(), cell.min.y});
        for (int i = 0; i < 2; ++i)
            pts.push_back({cell.max.x, cell.min.y + gen.uniform() * cell.height()});
        for (int i = 0; i < 2; ++i)
            pts.push_back({cell.min.x + gen.uniform() * cell.width(), cell.max.y});
        for (int i = 0; i < 2; ++i)
            pts.push_back({cell.min.x, cell.min.y + gen.uniform() * cell.height()});
        poly.vertices = convex_hull(std::move(pts));
        if (poly.vertices.size() >= 3 && poly.signed_area() > min_area) return poly;
        if (attempt == 64) return poly;  // vanishingly unlikely
    }
}

Polygon rectangle(double x0, double y0, double x1, double y1) {
    return Polygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

}  // namespace

Scenario make_qualitative(QualitativeKind kind) {
    std::vector<Polygon> polys;
    switch (kind) {
        case QualitativeKind::short_rect:
            polys.push_back(rectangle(-0.5, -0.5, 0.5, 0.5));
            break;
        case QualitativeKind::long_rect:
            polys.push_back(rectangle(-0.5, -2.5, 0.5, 2.5));
            break;
        case QualitativeKind::u_shape: {
            // Outer 2.5 m x 5 m block with a 2 m-deep, 4 m-wide cavity facing
            // the start; 0.5 m walls.
            Polygon u;
            u.vertices = {{-1.25, -2.5}, {1.25, -2.5}, {1.25, 2.5},  {-1.25, 2.5},
                          {-1.25, 2.0},  {0.75, 2.0},  {0.75, -2.0}, {-1.25, -2.0}};
            polys.push_back(std::move(u));
            break;
        }
    }
    Scenario s;
    s.world = World(std::move(polys), Rect{{-12.0, -6.0}, {12.0, 6.0}});
    s.target = {10.0, 0.0};
    s.start = {-10.0, 0.0, heading_toward({-10.0, 0.0}, s.target)};
    return s;
}

std::pair<State, Vec2> sample_start_target(std::uint64_t seed) {
    rng::SplitMix64 gen(rng::substream(seed, 1000003));
    const double sy = gen.uniform(-kLineHalfSpan, kLineHalfSpan);
    const double ty = gen.uniform(-kLineHalfSpan, kLineHalfSpan);
    const Vec2 target{kLineX, ty};
    const State start{-kLineX, sy, heading_toward({-kLineX, sy}, target)};
    return {start, target};
}

Scenario make_random_grid(int grid_n, Convexity convexity, std::uint64_t seed) {
    if (grid_n < 2) throw std::invalid_argument("make_random_grid: grid_n too small");
    const double cell_size = 2.0 * kRegionHalf / grid_n;
    std::vector<Polygon> polys;
    for (int j = 0; j < grid_n; ++j) {
        for (int i = 0; i < grid_n; ++i) {
            if ((i + j) % 2 != 0) continue;  // checkered pattern
            const Rect cell{{-kRegionHalf + i * cell_size, -kRegionHalf + j * cell_size},
                            {-kRegionHalf + (i + 1) * cell_size,
                             -kRegionHalf + (j + 1) * cell_size}};
            const std::uint64_t cell_key =
                rng::substream(seed, static_cast<std::uint64_t>(j) * grid_n + i);
            polys.push_back(edge_sampled_hull(cell, rng::substream(cell_key, 0)));
            if (convexity == Convexity::non_convex) {
                polys.push_back(edge_sampled_hull(cell, rng::substream(cell_key, 1)));
            }
        }
    }
    Scenario s;
    s.world = World(std::move(polys),
                    Rect{{-kRegionHalf, -kRegionHalf}, {kRegionHalf, kRegionHalf}});
    auto [start, target] = sample_start_target(seed);
    s.start = start;
    s.target = target;
    s.seed = seed;
    return s;
}

std::string scenario_to_json_string(const Scenario& scenario, int indent) {
    nlohmann::json j;
    j["world"] = detail::world_to_json(scenario.world);
    j["start"] = {{"x", scenario.start.x},
                  {"y", scenario.start.y},
                  {"theta", scenario.start.theta}};
    j["target"] = {scenario.target.x, scenario.target.y};
    j["time_limit"] = scenario.time_limit;
    j["success_radius"] = scenario.success_radius;
    j["seed"] = scenario.seed;
    return j.dump(indent);
}

Scenario scenario_from_json_string(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Scenario s;
    s.world = detail::world_from_json(j.at("world"));
    s.start = {j.at("start").at("x").get<double>(), j.at("start").at("y").get<double>(),
               j.at("start").at("theta").get<double>()};
    s.target = {j.at("target").at(0).get<double>(), j.at("target").at(1).get<double>()};
    s.time_limit = j.at("time_limit").get<double>();
    s.success_radius = j.at("success_radius").get<double>();
    s.seed = j.at("seed").get<std::uint64_t>();
    return s;
}

}  // namespace drpa
