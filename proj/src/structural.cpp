#include "cliff/structural.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "cliff/center.hpp"
#include "cliff/exact_linalg.hpp"

namespace cliff {

namespace {

GaussianRational half() { return GaussianRational(make_rational(1, 2)); }

/// Ranks reachable by the descent relate to the block dimension as
/// m = sqrt(Nb) for a real block and m = 2 sqrt(Nb) for a quaternionic one.
struct BlockRing {
  DivisionRing ring;
  std::int64_t d;
};

BlockRing ring_from_minimal_rank(int min_rank, std::int64_t block_dim, const Signature& sig, int trials) {
  const std::int64_t m = min_rank;
  if (m * m == block_dim) return {DivisionRing::R, m};
  if (m * m == 4 * block_dim) return {DivisionRing::H, m / 4};
  throw std::runtime_error("structural oracle: minimal ideal search did not stabilize for " + sig.str() +
                           " (found rank " + std::to_string(min_rank) + "); rerun with more than " +
                           std::to_string(trials) + " trials");
}

/// One greedy descent: repeatedly right-multiply the generator by random
/// idempotent factors (1 + s*B)/2 built from blades squaring to +1, keeping
/// a candidate only when it stays idempotent (B commutes with the current
/// generator) and strictly lowers the ideal rank.
int descend_once(const Signature& sig, const Mq& seed_idempotent,
                 const std::vector<BladeMask>& plus_blades, int trials, std::mt19937_64& rng) {
  Mq f = seed_idempotent;
  int rank = left_ideal_dimension_idempotent(f);
  if (plus_blades.empty()) return rank;
  // Deeper levels commute with fewer random blades, so the per-level
  // patience is a multiple of the restart budget.
  const int patience = trials * 8;
  int failures = 0;
  while (failures < patience) {
    BladeMask mask = plus_blades[rng() % plus_blades.size()];
    bool negate = (rng() & 1) != 0;
    Mq factor = Mq::scalar(sig, half());
    factor.add_term(mask, negate ? -half() : half());
    Mq candidate = f * factor;
    if (candidate.is_zero()) {
      ++failures;
      continue;
    }
    if (candidate * candidate != candidate) {
      ++failures;
      continue;
    }
    int r = left_ideal_dimension_idempotent(candidate);
    if (r < rank) {
      f = std::move(candidate);
      rank = r;
      failures = 0;
    } else {
      ++failures;
    }
  }
  return rank;
}

/// Restarted minimum; accepted once the best value recurs five times.
int minimal_ideal_rank(const Signature& sig, const Mq& seed_idempotent, int trials,
                       std::mt19937_64& rng) {
  std::vector<BladeMask> plus_blades;
  const BladeMask count = BladeMask{1} << sig.n();
  for (BladeMask m = 1; m < count; ++m)
    if (blade_square_sign(m, sig) > 0) plus_blades.push_back(m);

  constexpr int kRequiredRepeats = 5;
  int best = -1, repeats = 0;
  for (int restart = 0; restart < trials && repeats < kRequiredRepeats; ++restart) {
    int r = descend_once(sig, seed_idempotent, plus_blades, trials, rng);
    if (best < 0 || r < best) {
      best = r;
      repeats = 1;
    } else if (r == best) {
      ++repeats;
    }
  }
  if (repeats < kRequiredRepeats)
    throw std::runtime_error("structural oracle: rank minimum did not repeat for " + sig.str() +
                             "; rerun with more than " + std::to_string(trials) + " trials");
  return best;
}

std::int64_t isqrt_exact(std::int64_t v) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) throw std::logic_error("dimension is not a perfect square");
  return r;
}

}  // namespace

int left_ideal_dimension_bruteforce(const Mq& g) {
  const Signature& sig = g.signature();
  const std::size_t dim = sig.dim();
  // Column B holds the coordinates of B * g.
  QMatrix m(dim, std::vector<GaussianRational>(dim));
  for (BladeMask b = 0; b < dim; ++b) {
    Mq prod = Mq::blade(sig, b, GaussianRational(1)) * g;
    for (const auto& [mask, c] : prod.terms()) m[mask][b] = c;
  }
  return q_rank(std::move(m));
}

int left_ideal_dimension_idempotent(const Mq& g) {
  if (g * g != g) throw std::invalid_argument("left_ideal_dimension_idempotent: not an idempotent");
  // Right multiplication by an idempotent is a projector onto C * g, so its
  // rank is its trace; only the scalar coefficient survives the blade trace.
  GaussianRational tr = g.scalar_part();
  Rational value = tr.re * Rational(static_cast<long>(g.signature().dim()));
  if (tr.im != 0 || value.get_den() != 1 || value < 0)
    throw std::logic_error("idempotent trace is not a nonnegative integer");
  return static_cast<int>(value.get_num().get_si());
}

MatrixAlgebraType classify_structural(const Signature& sig, int trials, std::uint64_t seed) {
  if (sig.n() > kMaxStructuralN)
    throw std::invalid_argument("structural classification supports n <= " +
                                std::to_string(kMaxStructuralN));
  const std::int64_t total_dim = static_cast<std::int64_t>(sig.dim());
  std::mt19937_64 rng(seed);

  CenterReport z = center(sig);
  if (z.dimension == 1) {
    Mq one = Mq::scalar(sig, GaussianRational(1));
    int m = minimal_ideal_rank(sig, one, trials, rng);
    BlockRing b = ring_from_minimal_rank(m, total_dim, sig, trials);
    return {b.d, b.ring, false};
  }
  if (z.dimension != 2)
    throw std::logic_error("unexpected center dimension " + std::to_string(z.dimension) + " for " +
                           sig.str());

  Mq eps = orientation_operator<GaussianRational>(sig);
  Mq eps_sq = eps * eps;
  GaussianRational s = eps_sq.scalar_part();
  if (eps_sq != Mq::scalar(sig, s) || (s != GaussianRational(1) && s != GaussianRational(-1)))
    throw std::logic_error("orientation operator square is not a unit scalar for " + sig.str());

  if (s == GaussianRational(-1)) {
    // Two-dimensional center generated by a square root of -1: complex type.
    return {isqrt_exact(total_dim / 2), DivisionRing::C, false};
  }

  // epsilon^2 = +1: split along the central idempotents (1 +/- eps)/2 and
  // classify each block.
  MatrixAlgebraType blocks[2];
  for (int which = 0; which < 2; ++which) {
    Mq proj = Mq::scalar(sig, half());
    proj += (which == 0 ? eps : -eps) * half();
    int m = minimal_ideal_rank(sig, proj, trials, rng);
    BlockRing b = ring_from_minimal_rank(m, total_dim / 2, sig, trials);
    blocks[which] = {b.d, b.ring, false};
  }
  if (blocks[0] != blocks[1])
    throw std::runtime_error("structural oracle: the two central blocks of " + sig.str() +
                             " classified differently");
  return {blocks[0].d, blocks[0].ring, true};
}

}  // namespace cliff
