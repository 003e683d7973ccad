#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliff {

/// Hard ceiling on the number of generators for concretely built algebras
/// (dimension 2^12 = 4096 coefficients).
inline constexpr int kMaxGenerators = 12;

/// Quadratic-form signature (p, q): generators 0..p-1 square to +1,
/// generators p..p+q-1 square to -1. Plus-signs first; a relabeling
/// utility for the physics time-first ordering lives below.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be nonnegative");
    if (p + q > kMaxGenerators)
      throw std::invalid_argument("signature (" + std::to_string(p) + "," + std::to_string(q) +
                                  ") exceeds the n <= " + std::to_string(kMaxGenerators) + " ceiling");
  }

  int n() const { return p + q; }

  /// Algebra dimension 2^n.
  std::size_t dim() const { return std::size_t{1} << n(); }

  /// +1 or -1, the square of generator mu.
  int metric_sign(int mu) const {
    if (mu < 0 || mu >= n()) throw std::out_of_range("generator index out of range");
    return mu < p ? +1 : -1;
  }

  std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

  friend bool operator==(const Signature& a, const Signature& b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

/// Permutation mapping physics labels (time-like directions first) to the
/// internal plus-first order: physics index i corresponds to internal index
/// perm[i]. Time-like means squaring to -1 here.
inline std::vector<int> physics_relabeling(const Signature& sig) {
  std::vector<int> perm(static_cast<std::size_t>(sig.n()));
  for (int i = 0; i < sig.q; ++i) perm[static_cast<std::size_t>(i)] = sig.p + i;
  for (int i = 0; i < sig.p; ++i) perm[static_cast<std::size_t>(sig.q + i)] = i;
  return perm;
}

}  // namespace cliff
