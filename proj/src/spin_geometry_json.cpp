#include "cliff/spin_geometry_json.hpp"

#include <sstream>
#include <stdexcept>

namespace cliff {

using nlohmann::json;

namespace {

json grid_header(const Grid& grid, const Signature& sig) {
  json j;
  j["signature"] = {sig.p, sig.q};
  j["dims"] = grid.sizes;
  j["spacing"] = grid.spacing;
  return j;
}

std::pair<Grid, Signature> grid_from(const json& j) {
  Grid grid;
  grid.sizes = j.at("dims").get<std::vector<int>>();
  grid.spacing = j.at("spacing").get<std::vector<double>>();
  if (grid.sizes.size() != grid.spacing.size())
    throw std::invalid_argument("dims and spacing ranks differ");
  const auto& s = j.at("signature");
  return {grid, Signature(s.at(0).get<int>(), s.at(1).get<int>())};
}

}  // namespace

json to_json(const FrameField& frame) {
  json j = grid_header(frame.grid, frame.signature);
  const std::size_t per_site = static_cast<std::size_t>(frame.signature.n()) * frame.signature.n();
  json sites = json::array();
  for (std::size_t s = 0; s < frame.grid.sites(); ++s) {
    json one = json::array();
    for (std::size_t i = 0; i < per_site; ++i) one.push_back(frame.vielbein[s * per_site + i]);
    sites.push_back(std::move(one));
  }
  j["vielbein"] = std::move(sites);
  return j;
}

json to_json(const ConnectionField& conn) {
  json j = grid_header(conn.grid, conn.signature);
  const std::size_t n = static_cast<std::size_t>(conn.signature.n());
  const std::size_t per_site = n * n * n;
  json sites = json::array();
  for (std::size_t s = 0; s < conn.grid.sites(); ++s) {
    json one = json::array();
    for (std::size_t i = 0; i < per_site; ++i) one.push_back(conn.coeffs[s * per_site + i]);
    sites.push_back(std::move(one));
  }
  j["coeffs"] = std::move(sites);
  return j;
}

json to_json(const SpinorField& field) {
  json j = grid_header(field.grid, field.signature);
  j["f"] = field.f;
  json sites = json::array();
  for (std::size_t s = 0; s < field.grid.sites(); ++s) {
    json one = json::array();
    for (int c = 0; c < field.f; ++c) {
      const auto& v = field.at(s, c);
      one.push_back({v.real(), v.imag()});
    }
    sites.push_back(std::move(one));
  }
  j["values"] = std::move(sites);
  return j;
}

FrameField frame_from_json(const json& j) {
  auto [grid, sig] = grid_from(j);
  FrameField frame{grid, sig, {}};
  const std::size_t per_site = static_cast<std::size_t>(sig.n()) * sig.n();
  const auto& sites = j.at("vielbein");
  if (sites.size() != grid.sites()) throw std::invalid_argument("vielbein site count mismatch");
  frame.vielbein.reserve(grid.sites() * per_site);
  for (const auto& one : sites) {
    if (one.size() != per_site) throw std::invalid_argument("vielbein entry count mismatch");
    for (const auto& v : one) frame.vielbein.push_back(v.get<double>());
  }
  return frame;
}

ConnectionField connection_from_json(const json& j) {
  auto [grid, sig] = grid_from(j);
  ConnectionField conn{grid, sig, {}};
  const std::size_t n = static_cast<std::size_t>(sig.n());
  const std::size_t per_site = n * n * n;
  const auto& sites = j.at("coeffs");
  if (sites.size() != grid.sites()) throw std::invalid_argument("connection site count mismatch");
  conn.coeffs.reserve(grid.sites() * per_site);
  for (const auto& one : sites) {
    if (one.size() != per_site) throw std::invalid_argument("connection entry count mismatch");
    for (const auto& v : one) conn.coeffs.push_back(v.get<double>());
  }
  conn.validate();
  return conn;
}

SpinorField spinor_field_from_json(const json& j) {
  auto [grid, sig] = grid_from(j);
  SpinorField field{grid, sig, j.at("f").get<int>(), {}};
  const auto& sites = j.at("values");
  if (sites.size() != grid.sites()) throw std::invalid_argument("spinor site count mismatch");
  field.values.reserve(grid.sites() * static_cast<std::size_t>(field.f));
  for (const auto& one : sites) {
    if (static_cast<int>(one.size()) != field.f)
      throw std::invalid_argument("spinor component count mismatch");
    for (const auto& v : one)
      field.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
  }
  return field;
}

std::string spinor_field_to_csv(const SpinorField& field) {
  if (field.grid.dims() > 2)
    throw std::invalid_argument("CSV output is limited to 1-d and 2-d grids");
  std::ostringstream os;
  os << "site";
  for (int d = 0; d < field.grid.dims(); ++d) os << ",x" << d;
  for (int c = 0; c < field.f; ++c) os << ",c" << c << "_re,c" << c << "_im";
  os << "\n";
  for (std::size_t s = 0; s < field.grid.sites(); ++s) {
    os << s;
    for (int v : field.grid.coords(s)) os << "," << v;
    for (int c = 0; c < field.f; ++c) {
      const auto& v = field.at(s, c);
      os << "," << v.real() << "," << v.imag();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cliff
