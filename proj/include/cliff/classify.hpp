#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliff/signature.hpp"

namespace cliff {

enum class DivisionRing { R, C, H };

inline int ring_real_dim(DivisionRing r) {
  switch (r) {
    case DivisionRing::R: return 1;
    case DivisionRing::C: return 2;
    case DivisionRing::H: return 4;
  }
  return 0;
}

inline char ring_letter(DivisionRing r) {
  switch (r) {
    case DivisionRing::R: return 'R';
    case DivisionRing::C: return 'C';
    case DivisionRing::H: return 'H';
  }
  return '?';
}

DivisionRing ring_from_letter(char c);

/// Isomorphism class M(d,K), or M(d,K) + M(d,K) when doubled.
struct MatrixAlgebraType {
  std::int64_t d = 1;
  DivisionRing ring = DivisionRing::R;
  bool doubled = false;

  std::int64_t real_dimension() const { return (doubled ? 2 : 1) * d * d * ring_real_dim(ring); }

  /// Canonical rendering: "R", "H+H", "M(4,R)", "M(16,R)+M(16,R)".
  std::string str() const;

  friend bool operator==(const MatrixAlgebraType& a, const MatrixAlgebraType& b) {
    return a.d == b.d && a.ring == b.ring && a.doubled == b.doubled;
  }
  friend bool operator!=(const MatrixAlgebraType& a, const MatrixAlgebraType& b) { return !(a == b); }
};

/// One rewrite of the classification derivation: the rule applied and the
/// tensor expression after applying it.
struct ReductionStep {
  std::string rule;
  std::string expression;
};

struct ReductionChain {
  std::vector<ReductionStep> steps;
};

/// Sign of the square of the orientation operator, from (p - q) mod 4 alone.
/// Matches squaring the grade-n blade; defined as +1 for n = 0.
int epsilon_square_sign(int p, int q);

/// Classification ceiling for the symbolic routines (no 2^n storage).
inline constexpr int kMaxSymbolicN = 30;

/// Isomorphism type of C(p,q) by periodicity arithmetic, with the derivation
/// chain: dimensional reduction to the (anti-)Euclidean line, mod-8 steps,
/// base cases, then tensor simplification. Valid for p + q <= 30.
std::pair<MatrixAlgebraType, ReductionChain> classify_real(int p, int q);

/// Type of the complexified algebra: M(2^(n/2), C) for n even, doubled
/// M(2^((n-1)/2), C) for n odd.
MatrixAlgebraType classify_complex(int n);

/// Type of the even subalgebra C0(p,q) = C(p,q-1) = C(q,p-1). Requires n >= 1.
MatrixAlgebraType classify_even(int p, int q);

/// Tensor product of matrix algebra types over R, by the eight ring rules
/// extended multiplicatively over block sizes. At most one operand doubled.
MatrixAlgebraType tensor_type(const MatrixAlgebraType& a, const MatrixAlgebraType& b);

/// Dirac/Weyl/Majorana existence summary for a signature.
struct SpinorTypeReport {
  std::int64_t dirac_dimension = 1;  // f = 2^floor(n/2)
  bool weyl_defined = false;
  bool majorana_exists = false;
  bool weyl_majorana_exists = false;
  bool chirality_uses_i = false;  // epsilon^2 == -1
  // Which of the two opposite-signature algebras carries the real structure.
  bool real_type_at_pq = false;
  bool real_type_at_qp = false;
};

SpinorTypeReport spinor_types(int p, int q);

/// One row of the n = 4..11 survey tables.
struct TableRow {
  int n = 0;
  MatrixAlgebraType complex_type;
  MatrixAlgebraType first;   // C(n,0) or C(n-1,1)
  MatrixAlgebraType second;  // C(0,n) or C(1,n-1)
  MatrixAlgebraType even;    // C0 of the first column signature
  int theta = 0;             // +1 theta = eps, -1 theta = i*eps, 0 for odd n
};

enum class TableFamily { Euclidean, Hyperbolic };

std::vector<TableRow> classification_table(TableFamily family, int n_min, int n_max);

std::string table_to_markdown(TableFamily family, const std::vector<TableRow>& rows);
std::string table_to_csv(TableFamily family, const std::vector<TableRow>& rows);
std::string table_to_json(TableFamily family, const std::vector<TableRow>& rows);

std::string theta_label(int theta);

}  // namespace cliff
