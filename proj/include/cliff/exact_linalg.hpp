#pragma once

#include <vector>

#include "cliff/scalars.hpp"

namespace cliff {

/// Dense row-major matrix over the Gaussian rationals. Small sizes only;
/// everything here is plain fraction Gaussian elimination.
using QMatrix = std::vector<std::vector<GaussianRational>>;

QMatrix q_identity(std::size_t n);

int q_rank(QMatrix m);

/// Basis of the right kernel {x : m x = 0}, one vector per basis element.
std::vector<std::vector<GaussianRational>> q_kernel(QMatrix m);

/// Solve m x = rhs; throws std::domain_error when inconsistent or m is
/// rank-deficient on the needed columns in an ambiguous way (a particular
/// solution with free variables set to zero is returned otherwise).
std::vector<GaussianRational> q_solve(QMatrix m, std::vector<GaussianRational> rhs);

}  // namespace cliff
