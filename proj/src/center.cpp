#include "cliff/center.hpp"

namespace cliff {

// The commutator with a fixed blade G maps a basis blade B to a multiple of
// the single blade B ^ G, and B -> B ^ G is a bijection of masks. The stacked
// linear system [x, G] = 0 over all probe blades G therefore never couples
// two unknowns in the same equation, and its kernel is spanned exactly by the
// blades whose two product signs agree for every probe.
//
// Probes: the generators gamma^mu for the full algebra; the bivectors
// gamma^mu gamma^nu for the even part (they generate C0, and for n even the
// orientation blade commutes with them while anticommuting with every
// generator).
CenterReport center(const Signature& sig, bool even_only) {
  const int n = sig.n();
  std::vector<BladeMask> probes;
  if (even_only) {
    for (int mu = 0; mu < n; ++mu)
      for (int nu = mu + 1; nu < n; ++nu)
        probes.push_back((BladeMask{1} << mu) | (BladeMask{1} << nu));
  } else {
    for (int mu = 0; mu < n; ++mu) probes.push_back(BladeMask{1} << mu);
  }

  CenterReport report;
  const BladeMask count = BladeMask{1} << n;
  for (BladeMask mask = 0; mask < count; ++mask) {
    if (even_only && blade_grade(mask) % 2 != 0) continue;
    bool central = true;
    for (BladeMask g : probes) {
      if (blade_product_sign(mask, g, sig) != blade_product_sign(g, mask, sig)) {
        central = false;
        break;
      }
    }
    if (central) report.basis.push_back(Mq::blade(sig, mask, GaussianRational(1)));
  }
  report.dimension = static_cast<int>(report.basis.size());
  return report;
}

}  // namespace cliff
