#pragma once

// Shared JSON helpers for world/scenario serialization. Internal to src/.

#include <json.hpp>

#include "drpa/world.hpp"

namespace drpa::detail {

nlohmann::json world_to_json(const World& world);
World world_from_json(const nlohmann::json& j);

}  // namespace drpa::detail
