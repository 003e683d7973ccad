#include "cliff/sm.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace cliff {

namespace {

using Cd = std::complex<double>;

ParticleSpec quark_l(const std::string& name, int family, int slot) {
  return {name, family, Chirality::Left, Su2Rep::Doublet, slot, make_rational(1, 3), ColorRep::Triplet};
}
ParticleSpec lepton_l(const std::string& name, int family, int slot) {
  return {name, family, Chirality::Left, Su2Rep::Doublet, slot, Rational(-1), ColorRep::Singlet};
}
ParticleSpec quark_r(const std::string& name, int family, long num) {
  return {name, family, Chirality::Right, Su2Rep::Singlet, 0, make_rational(num, 3), ColorRep::Triplet};
}
ParticleSpec lepton_r(const std::string& name, int family, long y) {
  return {name, family, Chirality::Right, Su2Rep::Singlet, 0, Rational(y), ColorRep::Singlet};
}

}  // namespace

std::vector<ParticleSpec> standard_model_registry() {
  return {
      // Left-handed quark doublets, up-type printed first.
      quark_l("u_L", 1, 0), quark_l("d_L", 1, 1),
      quark_l("c_L", 2, 0), quark_l("s_L", 2, 1),
      quark_l("t_L", 3, 0), quark_l("b_L", 3, 1),
      // Left-handed lepton doublets, charged lepton printed above its neutrino.
      lepton_l("e_L", 1, 0), lepton_l("nu_e_L", 1, 1),
      lepton_l("mu_L", 2, 0), lepton_l("nu_mu_L", 2, 1),
      lepton_l("tau_L", 3, 0), lepton_l("nu_tau_L", 3, 1),
      // Right-handed singlets: quarks 4/3 and -2/3, charged leptons -2,
      // neutrinos 0 (fully decoupled from the electroweak connection).
      quark_r("u_R", 1, 4), quark_r("d_R", 1, -2),
      quark_r("c_R", 2, 4), quark_r("s_R", 2, -2),
      quark_r("t_R", 3, 4), quark_r("b_R", 3, -2),
      lepton_r("e_R", 1, -2), lepton_r("nu_e_R", 1, 0),
      lepton_r("mu_R", 2, -2), lepton_r("nu_mu_R", 2, 0),
      lepton_r("tau_R", 3, -2), lepton_r("nu_tau_R", 3, 0),
  };
}

void validate_registry(const std::vector<ParticleSpec>& registry) {
  // Expected slot census: per family and sector, two left doublet members
  // and two right singlets.
  std::map<std::string, int> expected, seen;
  for (int family = 1; family <= 3; ++family)
    for (const char* sector : {"quark", "lepton"}) {
      expected[std::string(sector) + " L f" + std::to_string(family)] = 2;
      expected[std::string(sector) + " R f" + std::to_string(family)] = 2;
    }
  std::set<std::string> names;
  for (const ParticleSpec& p : registry) {
    if (p.family < 1 || p.family > 3)
      throw std::invalid_argument("registry entry " + p.name + " has family outside 1..3");
    if (!names.insert(p.name).second)
      throw std::invalid_argument("registry entry " + p.name + " is duplicated");
    if (p.chirality == Chirality::Left && p.su2 != Su2Rep::Doublet)
      throw std::invalid_argument("left-handed entry " + p.name + " must sit in an SU(2) doublet");
    if (p.chirality == Chirality::Right && p.su2 != Su2Rep::Singlet)
      throw std::invalid_argument("right-handed entry " + p.name + " must be an SU(2) singlet");
    std::string key = std::string(p.is_quark() ? "quark" : "lepton") +
                      (p.chirality == Chirality::Left ? " L f" : " R f") + std::to_string(p.family);
    ++seen[key];
  }
  std::string missing;
  for (const auto& [key, count] : expected) {
    int have = seen.count(key) ? seen.at(key) : 0;
    if (have != count)
      missing += (missing.empty() ? "" : ", ") + key + " (have " + std::to_string(have) + ", want " +
                 std::to_string(count) + ")";
  }
  if (!missing.empty()) throw std::invalid_argument("registry incomplete: " + missing);
}

HyperchargeAuditReport hypercharge_audit(const std::vector<ParticleSpec>& registry) {
  validate_registry(registry);
  HyperchargeAuditReport report;
  report.all_equal = true;
  for (int family = 1; family <= 3; ++family) {
    for (bool quark : {true, false}) {
      HyperchargeAuditLine line;
      line.family = family;
      line.sector = quark ? "quark" : "lepton";
      for (const ParticleSpec& p : registry) {
        if (p.family != family || p.is_quark() != quark) continue;
        (p.chirality == Chirality::Left ? line.left_sum : line.right_sum) += p.hypercharge;
      }
      line.equal = line.left_sum == line.right_sum;
      report.all_equal = report.all_equal && line.equal;
      report.lines.push_back(std::move(line));
    }
  }
  return report;
}

int representation_dimension(const ParticleSpec& spec) {
  int weyl = 2;
  int color = spec.color == ColorRep::Triplet ? 3 : 1;
  int su2 = spec.su2 == Su2Rep::Doublet ? 2 : 1;
  int u1 = 1;
  return weyl * color * su2 * u1;
}

CMatrix dirac_pairing_matrix(const GammaRepresentation& rep) {
  const Signature& sig = rep.signature;
  CMatrix a = CMatrix::identity(rep.f);
  for (int mu = sig.p; mu < sig.n(); ++mu) a = a * rep.gammas[static_cast<std::size_t>(mu)];
  // The bare product is hermitian or antihermitian depending on q; a factor
  // of i fixes the latter case.
  if ((sig.q * (sig.q + 1) / 2) % 2 == 1) a *= GaussianRational{Rational(0), Rational(1)};
  if (a.dagger() != a) throw std::logic_error("pairing matrix failed to come out hermitian");
  return a;
}

std::vector<Cd> dirac_adjoint(const SpinorVector& psi, const GammaRepresentation& rep) {
  if (static_cast<int>(psi.components.size()) != rep.f)
    throw std::invalid_argument("spinor length does not match the representation");
  auto a = dirac_pairing_matrix(rep).to_complex();
  std::vector<Cd> row(static_cast<std::size_t>(rep.f), Cd(0.0));
  for (int j = 0; j < rep.f; ++j)
    for (int i = 0; i < rep.f; ++i)
      row[static_cast<std::size_t>(j)] +=
          std::conj(psi.components[static_cast<std::size_t>(i)]) * a[static_cast<std::size_t>(i) * rep.f + j];
  return row;
}

Cd dirac_pairing(const SpinorVector& psi, const SpinorVector& phi, const GammaRepresentation& rep) {
  auto row = dirac_adjoint(psi, rep);
  Cd acc(0.0);
  for (int i = 0; i < rep.f; ++i) acc += row[static_cast<std::size_t>(i)] * phi.components[static_cast<std::size_t>(i)];
  return acc;
}

std::pair<BilinearReport, BilinearReport> bilinear_decomposition_check(
    const GammaRepresentation& rep, const SpinorVector& psi, Cd phi_scalar,
    const std::vector<double>& one_form) {
  const Signature& sig = rep.signature;
  if (sig.n() % 2 != 0) throw std::domain_error("the decomposition identities need a Weyl split");
  if (static_cast<int>(one_form.size()) != sig.n())
    throw std::invalid_argument("one-form rank does not match the signature");

  auto [left, right] = weyl_split(rep, psi);
  const int f = rep.f;

  // slash(A) psi for a coordinate one-form sample.
  auto apply_slash = [&](const SpinorVector& v) {
    SpinorVector out{sig, std::vector<Cd>(static_cast<std::size_t>(f), Cd(0.0))};
    for (int mu = 0; mu < sig.n(); ++mu) {
      if (one_form[static_cast<std::size_t>(mu)] == 0.0) continue;
      auto g = rep.gammas[static_cast<std::size_t>(mu)].to_complex();
      for (int i = 0; i < f; ++i) {
        Cd acc(0.0);
        for (int j = 0; j < f; ++j) acc += g[static_cast<std::size_t>(i) * f + j] * v.components[static_cast<std::size_t>(j)];
        out.components[static_cast<std::size_t>(i)] += one_form[static_cast<std::size_t>(mu)] * acc;
      }
    }
    return out;
  };

  BilinearReport vector_report;
  vector_report.lhs = dirac_pairing(psi, apply_slash(psi), rep);
  vector_report.rhs = dirac_pairing(left, apply_slash(left), rep) +
                      dirac_pairing(right, apply_slash(right), rep);
  vector_report.residual = std::abs(vector_report.lhs - vector_report.rhs);

  auto scale = [&](const SpinorVector& v) {
    SpinorVector out = v;
    for (auto& c : out.components) c *= phi_scalar;
    return out;
  };
  BilinearReport scalar_report;
  scalar_report.lhs = dirac_pairing(psi, scale(psi), rep);
  scalar_report.rhs = dirac_pairing(left, scale(right), rep) + dirac_pairing(right, scale(left), rep);
  scalar_report.residual = std::abs(scalar_report.lhs - scalar_report.rhs);

  return {vector_report, scalar_report};
}

}  // namespace cliff
