#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cliff/gamma.hpp"
#include "cliff/scalars.hpp"

namespace cliff {

enum class Chirality { Left, Right };
enum class Su2Rep { Singlet, Doublet };
enum class ColorRep { Singlet, Triplet };

/// One chirality slot of the particle table: doublet members are separate
/// entries sharing the doublet hypercharge.
struct ParticleSpec {
  std::string name;
  int family = 1;  // 1..3
  Chirality chirality = Chirality::Left;
  Su2Rep su2 = Su2Rep::Singlet;
  int doublet_slot = 0;  // 0 = printed upper member, 1 = lower; doublets only
  Rational hypercharge;
  ColorRep color = ColorRep::Singlet;

  bool is_quark() const { return color == ColorRep::Triplet; }
};

/// The 24 chirality slots: 3 quark doublets + 3 lepton doublets on the left,
/// 12 right-handed singlets. Printed doublet order is kept as-is (charged
/// lepton above its neutrino, up-type quark above down-type).
std::vector<ParticleSpec> standard_model_registry();

/// Throws std::invalid_argument listing what is missing or duplicated.
void validate_registry(const std::vector<ParticleSpec>& registry);

struct HyperchargeAuditLine {
  int family = 0;
  std::string sector;  // "quark" or "lepton"
  Rational left_sum;
  Rational right_sum;
  bool equal = false;
};

struct HyperchargeAuditReport {
  std::vector<HyperchargeAuditLine> lines;
  bool all_equal = false;
};

/// Per family and sector: sum of left slot hypercharges against the sum over
/// right singlets, exact rational arithmetic. Validates the registry first.
HyperchargeAuditReport hypercharge_audit(const std::vector<ParticleSpec>& registry);

/// Complex dimension of the full tensor slot: Weyl C^2 x color x SU(2) x U(1).
int representation_dimension(const ParticleSpec& spec);

/// The hermitian intertwiner behind the invariant pairing: the ascending
/// product of the negative-square generators, times i when needed to make it
/// hermitian. Reduces to the identity for definite signatures with q = 0.
CMatrix dirac_pairing_matrix(const GammaRepresentation& rep);

/// Row covector psi-bar = psi^dagger A.
std::vector<std::complex<double>> dirac_adjoint(const SpinorVector& psi,
                                                const GammaRepresentation& rep);

/// psi-bar phi.
std::complex<double> dirac_pairing(const SpinorVector& psi, const SpinorVector& phi,
                                   const GammaRepresentation& rep);

struct BilinearReport {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double residual = 0;
};

/// The two crossing identities: the vector coupling stays within each Weyl
/// component while a scalar coupling swaps them.
///   psibar gamma^mu A_mu psi = sum of the L and R diagonal pieces
///   psibar phi psi           = the two crossed pieces
std::pair<BilinearReport, BilinearReport> bilinear_decomposition_check(
    const GammaRepresentation& rep, const SpinorVector& psi, std::complex<double> phi_scalar,
    const std::vector<double>& one_form);

}  // namespace cliff
