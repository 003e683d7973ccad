#pragma once

#include <cstdint>

#include "cliff/classify.hpp"
#include "cliff/multivector.hpp"

namespace cliff {

inline constexpr int kMaxStructuralN = 10;
inline constexpr int kDefaultOracleTrials = 32;
inline constexpr std::uint64_t kDefaultOracleSeed = 20260808u;

/// Probabilistic structural classification of the concrete algebra C(p,q):
/// center dimension and the square of the orientation operator decide the
/// simple / doubled / complex split, and the ring of each simple block is
/// read off the minimal left-ideal dimension found by a randomized descent
/// over idempotent generators. Independent of the mod-8 arithmetic; the two
/// must agree.
///
/// `trials` bounds both the candidate draws per descent level and the number
/// of independent restarts; the minimum must recur five times to be accepted.
/// Throws when the search fails to stabilize.
MatrixAlgebraType classify_structural(const Signature& sig, int trials = kDefaultOracleTrials,
                                      std::uint64_t seed = kDefaultOracleSeed);

/// R-dimension of the left ideal C * g, i.e. the rank of the right-
/// multiplication map x -> x * g on the 2^n-dimensional algebra.
/// Exact brute force (Gaussian elimination); test-scale only.
int left_ideal_dimension_bruteforce(const Mq& g);

/// Same rank computed through the projector shortcut: for idempotent g the
/// right-multiplication map is a projector onto C * g, so its rank equals
/// its trace, which is 2^n times the scalar coefficient of g. Verifies the
/// idempotency it relies on and throws otherwise.
int left_ideal_dimension_idempotent(const Mq& g);

}  // namespace cliff
