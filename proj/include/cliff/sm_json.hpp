#pragma once

#include <json.hpp>

#include "cliff/sm.hpp"

namespace cliff {

nlohmann::json registry_to_json(const std::vector<ParticleSpec>& registry);
std::vector<ParticleSpec> registry_from_json(const nlohmann::json& j);

nlohmann::json audit_to_json(const HyperchargeAuditReport& report);
std::string audit_to_markdown(const HyperchargeAuditReport& report);

}  // namespace cliff
