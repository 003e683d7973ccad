#pragma once

#include <json.hpp>

#include "cliff/spin_geometry.hpp"

namespace cliff {

nlohmann::json to_json(const FrameField& frame);
nlohmann::json to_json(const ConnectionField& conn);
nlohmann::json to_json(const SpinorField& field);

FrameField frame_from_json(const nlohmann::json& j);
ConnectionField connection_from_json(const nlohmann::json& j);
SpinorField spinor_field_from_json(const nlohmann::json& j);

/// Compact CSV for 1-d and 2-d grids: site index, coordinates, then the
/// interleaved re/im spinor components.
std::string spinor_field_to_csv(const SpinorField& field);

}  // namespace cliff
