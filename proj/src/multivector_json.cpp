#include "cliff/multivector_json.hpp"

namespace cliff {

namespace {

Json blade_to_json(BladeMask mask) {
  Json idx = Json::array();
  for (int i : blade_indices(mask)) idx.push_back(i);
  return idx;
}

Signature signature_from_json(const Json& j) {
  const auto& s = j.at("signature");
  return Signature(s.at(0).get<int>(), s.at(1).get<int>());
}

}  // namespace

Json to_json(const Mq& m) {
  Json j;
  j["signature"] = {m.signature().p, m.signature().q};
  bool complexified = false;
  for (const auto& [mask, c] : m.terms())
    if (!c.is_real()) complexified = true;
  Json terms = Json::array();
  for (const auto& [mask, c] : m.terms()) {
    Json t;
    t["blade"] = blade_to_json(mask);
    t["re"] = to_string(c.re);
    if (complexified) t["im"] = to_string(c.im);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const Md& m) {
  Json j;
  j["signature"] = {m.signature().p, m.signature().q};
  Json terms = Json::array();
  for (const auto& [mask, c] : m.terms()) {
    Json t;
    t["blade"] = blade_to_json(mask);
    t["re"] = c;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Mq mq_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  Mq m(sig);
  for (const auto& t : j.at("terms")) {
    BladeMask mask = blade_from_indices(t.at("blade").get<std::vector<int>>(), sig);
    GaussianRational c(rational_from_string(t.at("re").get<std::string>()));
    if (t.contains("im")) c.im = rational_from_string(t.at("im").get<std::string>());
    m.add_term(mask, std::move(c));
  }
  return m;
}

Md md_from_json(const Json& j) {
  Signature sig = signature_from_json(j);
  Md m(sig);
  for (const auto& t : j.at("terms")) {
    BladeMask mask = blade_from_indices(t.at("blade").get<std::vector<int>>(), sig);
    m.add_term(mask, t.at("re").get<double>());
  }
  return m;
}

}  // namespace cliff
