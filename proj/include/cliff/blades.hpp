#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cliff/signature.hpp"

namespace cliff {

/// Basis blade of the 2^n-dimensional algebra: bit mu set means the factor
/// gamma^mu is present, factors taken in ascending index order.
using BladeMask = std::uint32_t;

inline int blade_grade(BladeMask m) { return std::popcount(m); }

/// Sign of the product of two basis blades: (-1)^(transpositions needed to
/// merge the ascending factor lists) times the metric signs of the repeated
/// generators. The result blade is a ^ b.
inline int blade_product_sign(BladeMask a, BladeMask b, const Signature& sig) {
  int sign = 1;
  // Each generator of b crosses every higher-index generator of a.
  BladeMask t = a >> 1;
  int swaps = 0;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  if (swaps & 1) sign = -sign;
  BladeMask common = a & b;
  while (common != 0) {
    int mu = std::countr_zero(common);
    sign *= sig.metric_sign(mu);
    common &= common - 1;
  }
  return sign;
}

/// Sign picked up by reversing the factor order of a grade-k blade:
/// (-1)^(k(k-1)/2).
inline int blade_reversal_sign(BladeMask m) {
  int k = blade_grade(m);
  return (k * (k - 1) / 2) % 2 == 0 ? +1 : -1;
}

/// +1 or -1, the square of a basis blade under the geometric product.
inline int blade_square_sign(BladeMask m, const Signature& sig) {
  return blade_product_sign(m, m, sig);
}

/// Generator indices of a blade, ascending.
inline std::vector<int> blade_indices(BladeMask m) {
  std::vector<int> idx;
  while (m != 0) {
    idx.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return idx;
}

inline BladeMask blade_from_indices(const std::vector<int>& idx, const Signature& sig) {
  BladeMask m = 0;
  for (int i : idx) {
    if (i < 0 || i >= sig.n()) throw std::out_of_range("blade index outside signature");
    if (m & (BladeMask{1} << i)) throw std::invalid_argument("repeated blade index");
    m |= BladeMask{1} << i;
  }
  return m;
}

}  // namespace cliff
