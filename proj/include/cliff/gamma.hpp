#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cliff/multivector.hpp"
#include "cliff/scalars.hpp"
#include "cliff/signature.hpp"

namespace cliff {

/// Dense matrix over the Gaussian rationals. The representation matrices all
/// have entries in {0, +/-1, +/-i}, so identity checks stay exact.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussianRational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const GaussianRational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;

  CMatrix operator-() const;
  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(const GaussianRational& s);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, const GaussianRational& s) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

  /// Entrywise complex conjugate (no transpose).
  CMatrix conj() const;
  CMatrix transpose() const;
  /// Conjugate transpose.
  CMatrix dagger() const { return conj().transpose(); }

  GaussianRational trace() const;

  /// Kronecker product, left factor major.
  static CMatrix kron(const CMatrix& a, const CMatrix& b);

  std::vector<std::complex<double>> to_complex() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<GaussianRational> a_;
};

/// Explicit matrices for the generators of the complexified algebra,
/// f = 2^floor(n/2), built by peeling two-dimensional factors.
struct GammaRepresentation {
  Signature signature;
  int f = 1;
  std::vector<CMatrix> gammas;
  CMatrix epsilon_matrix;  // ascending product of all generator matrices
};

/// Builds the representation recursively; every anticommutation relation is
/// exact on return. n = 0 yields the trivial 1x1 representation.
GammaRepresentation build_representation(const Signature& sig);

/// Chirality operator: epsilon when epsilon^2 = +1, i*epsilon otherwise.
/// Squares to the identity and anticommutes with every generator.
/// Only defined for n even.
CMatrix chirality(const GammaRepresentation& rep);

struct SpinorVector {
  Signature signature;
  std::vector<std::complex<double>> components;
};

/// (psi_L, psi_R) with theta psi_L = -psi_L, theta psi_R = +psi_R.
std::pair<SpinorVector, SpinorVector> weyl_split(const GammaRepresentation& rep,
                                                 const SpinorVector& psi);

/// One sign channel of the conjugation equation C gamma^mu* = eta gamma^mu C.
/// c(psi) = C psi* is the antilinear operator; c o c = c_squared * identity.
struct ConjugationChannel {
  int eta = 0;        // +1 or -1
  CMatrix matrix;     // normalized so C C* = c_squared * identity exactly
  int c_squared = 0;  // +1 or -1
  int theta_commute = 0;  // +1: C theta* = theta C; -1: anti; 0: n odd
};

/// Solves both sign channels; channels without solutions are omitted.
std::vector<ConjugationChannel> conjugation_channels(const GammaRepresentation& rep);

struct Conjugation {
  CMatrix matrix;
  int eta = 0;
};

/// The conjugation operator with c^2 = +1 when one exists (the Majorana
/// case); empty when only c^2 = -1 is achievable.
std::optional<Conjugation> build_conjugation(const GammaRepresentation& rep);

/// Real dimension of {psi : C psi* = psi}. Requires C C* = +identity.
int majorana_subspace_dimension(const GammaRepresentation& rep, const CMatrix& conjugation);
int majorana_subspace_dimension(const GammaRepresentation& rep,
                                const std::optional<Conjugation>& conjugation);

/// Same, restricted to the chirality eigenspace theta = chirality_sign.
int weyl_majorana_subspace_dimension(const GammaRepresentation& rep, const CMatrix& conjugation,
                                     int chirality_sign);

/// Matrix of an arbitrary algebra element in the representation.
CMatrix representation_matrix(const GammaRepresentation& rep, const Mq& element);

/// Float flavor for group elements built from exponentials; row-major f x f.
std::vector<std::complex<double>> representation_matrix_d(const GammaRepresentation& rep,
                                                          const Md& element);

}  // namespace cliff
