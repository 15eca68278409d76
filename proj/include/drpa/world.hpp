#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drpa/geometry.hpp"

namespace drpa {

// Simple polygon with counter-clockwise vertices (signed area > 0).
struct Polygon {
    std::vector<Vec2> vertices;

    double signed_area() const;
    Rect bbox() const;
    bool is_simple() const;
    bool is_convex() const;
    // Boundary-inclusive point membership via winding number.
    bool contains(Vec2 p) const;
};

// Immutable obstacle set over an axis-aligned region. Construction validates
// the polygon invariants and builds a uniform-grid occupancy index so that
// membership queries away from obstacle boundaries are O(1).
class World {
public:
    World() = default;
    World(std::vector<Polygon> polygons, Rect bounds);

    const std::vector<Polygon>& polygons() const { return polygons_; }
    const Rect& bounds() const { return bounds_; }

    // True iff p is inside or on the boundary of any polygon.
    bool contains(Vec2 p) const;

private:
    enum class CellState : std::uint8_t { free_cell, full_cell, mixed_cell };

    void build_index();

    std::vector<Polygon> polygons_;
    Rect bounds_{};
    int nx_ = 0;
    int ny_ = 0;
    double inv_cell_w_ = 0.0;
    double inv_cell_h_ = 0.0;
    std::vector<CellState> cell_state_;
    std::vector<std::uint32_t> cell_begin_;
    std::vector<std::uint32_t> candidates_;
};

inline bool contains(const World& world, Vec2 p) { return world.contains(p); }

// w_obst if the point is occupied, 0 otherwise. Never anything in between.
inline double collision_cost(const World& world, Vec2 p, double w_obst) {
    return world.contains(p) ? w_obst : 0.0;
}

// JSON document: {"bounds": {"min": [x,y], "max": [x,y]}, "polygons": [[[x,y],...],...]}
std::string world_to_json_string(const World& world, int indent = -1);
World world_from_json_string(const std::string& text);

}  // namespace drpa
