#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliff/multivector.hpp"

namespace cliff {

/// Invertible element of the Clifford group, float coefficients.
/// factor_parity is the parity of k when the element is known to be a
/// product of k vectors; otherwise it is inferred from grade support.
struct SpinElement {
  Md value;
  std::optional<int> factor_parity;  // 0 even, 1 odd
  std::optional<int> pin_norm_sign;  // sign of bar(s) s, set by pin_normalize
};

/// Connected-component labels of O(p,q): four for mixed signatures, two for
/// definite ones.
enum class GroupComponent { PlusUp, PlusDown, MinusUp, MinusDown, Plus, Minus };

std::string component_label(GroupComponent c);

struct OrthogonalMatrix {
  Signature signature;
  std::vector<double> entries;  // row-major n x n; column mu = image of gamma^mu
  GroupComponent component = GroupComponent::Plus;

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * signature.n() + j]; }
};

/// Inverse in the 2^n-dimensional algebra, by solving s x = 1.
/// Throws std::domain_error when s is not invertible.
Md multivector_inverse(const Md& s, double tolerance = 1e-10);

/// The covering map: column mu holds the generator-basis coordinates of
/// s gamma^mu s^-1. Throws when some conjugate leaves the generator span or
/// the result fails the metric-preservation check.
OrthogonalMatrix chi(const SpinElement& s, double tolerance = 1e-10);

/// Rescales s so |bar(s) s| = 1 and records the sign.
SpinElement pin_normalize(const SpinElement& s, double tolerance = 1e-10);

/// Component from the (factor parity, sign of bar(s) s) table. Definite
/// signatures collapse to Plus/Minus. On the even part this agrees with the
/// matrix-side detection in chi(); for odd parity the table presumes the
/// time-first axis labeling, so the two detectors can differ there.
GroupComponent component_of(const SpinElement& s, double tolerance = 1e-10);

/// exp of a grade-2 element: closed hyperbolic/trigonometric form when the
/// square is scalar, otherwise a scaled power series.
SpinElement exp_bivector(const Md& b);

/// General multivector exponential (scaling and squaring, 30-term series).
Md exp_series(const Md& x);

/// The n(n-1)/2 coordinate bivectors gamma^mu gamma^nu, mu < nu.
std::vector<Md> lie_algebra_basis(const Signature& sig);

/// Embeds a coordinate vector as v_mu gamma^mu.
Md vector_element(const Signature& sig, const std::vector<double>& v);

/// Product of vectors with the factor parity recorded.
SpinElement spin_element_from_vectors(const Signature& sig,
                                      const std::vector<std::vector<double>>& vectors);

}  // namespace cliff
