#pragma once

#include <vector>

#include "cliff/multivector.hpp"

namespace cliff {

/// Basis of the centralizer of the generators, found by solving
/// [x, gamma^mu] = 0 over the 2^n coefficient space.
struct CenterReport {
  int dimension = 0;
  std::vector<Mq> basis;
};

/// Center of C(p,q), or of the even part C0(p,q) when even_only is set.
/// Every returned basis element commutes with all n generators.
CenterReport center(const Signature& sig, bool even_only = false);

}  // namespace cliff
