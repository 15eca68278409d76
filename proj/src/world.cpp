#include "drpa/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json_detail.hpp"

namespace drpa {

namespace {

// Proper or touching intersection of two closed segments.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const Vec2 ab = b - a;
    const Vec2 cd = d - c;
    const double d1 = ab.cross(c - a);
    const double d2 = ab.cross(d - a);
    const double d3 = cd.cross(a - c);
    const double d4 = cd.cross(b - c);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0) return true;

    auto on_segment = [](Vec2 p, Vec2 q, Vec2 r) {
        // q collinear with segment (p, r); is it between them?
        return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) &&
               std::min(p.y, r.y) <= q.y && q.y <= std::max(p.y, r.y);
    };
    if (d1 == 0 && on_segment(a, c, b)) return true;
    if (d2 == 0 && on_segment(a, d, b)) return true;
    if (d3 == 0 && on_segment(c, a, d)) return true;
    if (d4 == 0 && on_segment(c, b, d)) return true;
    return false;
}

// Closed segment vs closed rectangle overlap (Liang-Barsky clip).
// Conservative answers are acceptable: callers treat "true" as "needs exact test".
bool segment_intersects_rect(Vec2 a, Vec2 b, const Rect& r) {
    if (r.contains(a) || r.contains(b)) return true;
    double t0 = 0.0, t1 = 1.0;
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - r.min.x, r.max.x - a.x, a.y - r.min.y, r.max.y - a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
        } else {
            const double t = q[i] / p[i];
            if (p[i] < 0.0) {
                if (t > t1) return false;
                t0 = std::max(t0, t);
            } else {
                if (t < t0) return false;
                t1 = std::min(t1, t);
            }
        }
    }
    return t0 <= t1;
}

}  // namespace

double Polygon::signed_area() const {
    double twice = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % n];
        twice += a.cross(b);
    }
    return 0.5 * twice;
}

Rect Polygon::bbox() const {
    Rect r{vertices.front(), vertices.front()};
    for (const Vec2& v : vertices) {
        r.min.x = std::min(r.min.x, v.x);
        r.min.y = std::min(r.min.y, v.y);
        r.max.x = std::max(r.max.x, v.x);
        r.max.y = std::max(r.max.y, v.y);
    }
    return r;
}

bool Polygon::is_simple() const {
    const std::size_t n = vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices[i];
        const Vec2 b = vertices[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip the edge itself and the two adjacent edges (shared endpoints).
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            const Vec2 c = vertices[j];
            const Vec2 d = vertices[(j + 1) % n];
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

bool Polygon::is_convex() const {
    const std::size_t n = vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
        const Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        if (e0.cross(e1) < 0.0) return false;
    }
    return true;
}

bool Polygon::contains(Vec2 p) const {
    int winding = 0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices[i];
        const Vec2 b = vertices[(i + 1) % n];
        const Vec2 ab = b - a;
        const Vec2 ap = p - a;
        const double cr = ab.cross(ap);
        if (cr == 0.0) {
            const double d = ab.dot(ap);
            if (d >= 0.0 && d <= ab.norm_sq()) return true;  // on the edge
        }
        if (a.y <= p.y) {
            if (b.y > p.y && cr > 0.0) ++winding;
        } else {
            if (b.y <= p.y && cr < 0.0) --winding;
        }
    }
    return winding != 0;
}

World::World(std::vector<Polygon> polygons, Rect bounds)
    : polygons_(std::move(polygons)), bounds_(bounds) {
    if (bounds_.min.x > bounds_.max.x || bounds_.min.y > bounds_.max.y)
        throw std::invalid_argument("World: empty bounds");
    for (const Polygon& poly : polygons_) {
        if (poly.vertices.size() < 3)
            throw std::invalid_argument("World: polygon with fewer than 3 vertices");
        for (const Vec2& v : poly.vertices) {
            if (!std::isfinite(v.x) || !std::isfinite(v.y))
                throw std::invalid_argument("World: non-finite polygon vertex");
            if (!bounds_.contains(v))
                throw std::invalid_argument("World: polygon vertex outside bounds");
        }
        if (poly.signed_area() <= 0.0)
            throw std::invalid_argument("World: polygon must be CCW with positive area");
        if (!poly.is_simple())
            throw std::invalid_argument("World: polygon must be simple");
    }
    build_index();
}

void World::build_index() {
    constexpr double kTargetCell = 0.25;  // m
    constexpr int kMaxCellsPerAxis = 512;

    nx_ = std::clamp(static_cast<int>(std::ceil(bounds_.width() / kTargetCell)), 1,
                     kMaxCellsPerAxis);
    ny_ = std::clamp(static_cast<int>(std::ceil(bounds_.height() / kTargetCell)), 1,
                     kMaxCellsPerAxis);
    const double cell_w = bounds_.width() / nx_;
    const double cell_h = bounds_.height() / ny_;
    inv_cell_w_ = cell_w > 0.0 ? 1.0 / cell_w : 0.0;
    inv_cell_h_ = cell_h > 0.0 ? 1.0 / cell_h : 0.0;

    cell_state_.assign(static_cast<std::size_t>(nx_) * ny_, CellState::free_cell);
    cell_begin_.assign(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
    candidates_.clear();

    std::vector<std::vector<std::uint32_t>> per_cell(cell_state_.size());

    for (int cy = 0; cy < ny_; ++cy) {
        for (int cx = 0; cx < nx_; ++cx) {
            const Rect cell{{bounds_.min.x + cx * cell_w, bounds_.min.y + cy * cell_h},
                            {bounds_.min.x + (cx + 1) * cell_w,
                             bounds_.min.y + (cy + 1) * cell_h}};
            const Vec2 center{0.5 * (cell.min.x + cell.max.x),
                              0.5 * (cell.min.y + cell.max.y)};
            const std::size_t idx = static_cast<std::size_t>(cy) * nx_ + cx;

            for (std::uint32_t pi = 0; pi < polygons_.size(); ++pi) {
                const Polygon& poly = polygons_[pi];
                const Rect bb = poly.bbox();
                if (bb.max.x < cell.min.x || bb.min.x > cell.max.x ||
                    bb.max.y < cell.min.y || bb.min.y > cell.max.y)
                    continue;

                bool crossed = false;
                const std::size_t n = poly.vertices.size();
                for (std::size_t i = 0; i < n && !crossed; ++i) {
                    crossed = segment_intersects_rect(poly.vertices[i],
                                                      poly.vertices[(i + 1) % n], cell);
                }
                if (crossed) {
                    per_cell[idx].push_back(pi);
                } else if (poly.contains(center)) {
                    // No edge crosses the cell, so membership is uniform: the
                    // whole cell lies inside this polygon.
                    cell_state_[idx] = CellState::full_cell;
                    per_cell[idx].clear();
                    break;
                }
            }
            if (cell_state_[idx] != CellState::full_cell && !per_cell[idx].empty())
                cell_state_[idx] = CellState::mixed_cell;
        }
    }

    for (std::size_t i = 0; i < per_cell.size(); ++i) {
        cell_begin_[i] = static_cast<std::uint32_t>(candidates_.size());
        candidates_.insert(candidates_.end(), per_cell[i].begin(), per_cell[i].end());
    }
    cell_begin_.back() = static_cast<std::uint32_t>(candidates_.size());
}

bool World::contains(Vec2 p) const {
    if (polygons_.empty() || !bounds_.contains(p)) return false;
    int cx = static_cast<int>((p.x - bounds_.min.x) * inv_cell_w_);
    int cy = static_cast<int>((p.y - bounds_.min.y) * inv_cell_h_);
    cx = std::min(cx, nx_ - 1);
    cy = std::min(cy, ny_ - 1);
    const std::size_t idx = static_cast<std::size_t>(cy) * nx_ + cx;
    switch (cell_state_[idx]) {
        case CellState::free_cell:
            return false;
        case CellState::full_cell:
            return true;
        case CellState::mixed_cell:
            for (std::uint32_t c = cell_begin_[idx]; c < cell_begin_[idx + 1]; ++c) {
                if (polygons_[candidates_[c]].contains(p)) return true;
            }
            return false;
    }
    return false;
}

namespace detail {

nlohmann::json world_to_json(const World& world) {
    nlohmann::json j;
    j["bounds"]["min"] = {world.bounds().min.x, world.bounds().min.y};
    j["bounds"]["max"] = {world.bounds().max.x, world.bounds().max.y};
    nlohmann::json polys = nlohmann::json::array();
    for (const Polygon& poly : world.polygons()) {
        nlohmann::json verts = nlohmann::json::array();
        for (const Vec2& v : poly.vertices) verts.push_back({v.x, v.y});
        polys.push_back(std::move(verts));
    }
    j["polygons"] = std::move(polys);
    return j;
}

World world_from_json(const nlohmann::json& j) {
    Rect bounds{{j.at("bounds").at("min").at(0).get<double>(),
                 j.at("bounds").at("min").at(1).get<double>()},
                {j.at("bounds").at("max").at(0).get<double>(),
                 j.at("bounds").at("max").at(1).get<double>()}};
    std::vector<Polygon> polys;
    for (const auto& jp : j.at("polygons")) {
        Polygon poly;
        for (const auto& jv : jp)
            poly.vertices.push_back({jv.at(0).get<double>(), jv.at(1).get<double>()});
        polys.push_back(std::move(poly));
    }
    return World(std::move(polys), bounds);
}

}  // namespace detail

std::string world_to_json_string(const World& world, int indent) {
    return detail::world_to_json(world).dump(indent);
}

World world_from_json_string(const std::string& text) {
    return detail::world_from_json(nlohmann::json::parse(text));
}

}  // namespace drpa
