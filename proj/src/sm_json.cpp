#include "cliff/sm_json.hpp"

#include <sstream>

namespace cliff {

using nlohmann::json;

json registry_to_json(const std::vector<ParticleSpec>& registry) {
  json out;
  out["version"] = 1;
  json particles = json::array();
  for (const ParticleSpec& p : registry) {
    json e;
    e["name"] = p.name;
    e["family"] = p.family;
    e["chirality"] = p.chirality == Chirality::Left ? "L" : "R";
    e["su2"] = p.su2 == Su2Rep::Doublet ? "doublet" : "singlet";
    if (p.su2 == Su2Rep::Doublet) e["slot"] = p.doublet_slot;
    e["hypercharge"] = to_string(p.hypercharge);
    e["color"] = p.color == ColorRep::Triplet ? "triplet" : "singlet";
    particles.push_back(std::move(e));
  }
  out["particles"] = std::move(particles);
  return out;
}

std::vector<ParticleSpec> registry_from_json(const json& j) {
  std::vector<ParticleSpec> out;
  for (const auto& e : j.at("particles")) {
    ParticleSpec p;
    p.name = e.at("name").get<std::string>();
    p.family = e.at("family").get<int>();
    p.chirality = e.at("chirality").get<std::string>() == "L" ? Chirality::Left : Chirality::Right;
    p.su2 = e.at("su2").get<std::string>() == "doublet" ? Su2Rep::Doublet : Su2Rep::Singlet;
    p.doublet_slot = e.contains("slot") ? e.at("slot").get<int>() : 0;
    p.hypercharge = rational_from_string(e.at("hypercharge").get<std::string>());
    p.color = e.at("color").get<std::string>() == "triplet" ? ColorRep::Triplet : ColorRep::Singlet;
    out.push_back(std::move(p));
  }
  return out;
}

json audit_to_json(const HyperchargeAuditReport& report) {
  json out;
  out["all_equal"] = report.all_equal;
  json lines = json::array();
  for (const auto& line : report.lines) {
    json e;
    e["family"] = line.family;
    e["sector"] = line.sector;
    e["left_sum"] = to_string(line.left_sum);
    e["right_sum"] = to_string(line.right_sum);
    e["equal"] = line.equal;
    lines.push_back(std::move(e));
  }
  out["lines"] = std::move(lines);
  return out;
}

std::string audit_to_markdown(const HyperchargeAuditReport& report) {
  std::ostringstream os;
  os << "| family | sector | left sum | right sum | equal |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& line : report.lines)
    os << "| " << line.family << " | " << line.sector << " | " << to_string(line.left_sum) << " | "
       << to_string(line.right_sum) << " | " << (line.equal ? "yes" : "no") << " |\n";
  os << "\nall sums equal: " << (report.all_equal ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace cliff
