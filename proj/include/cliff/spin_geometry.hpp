#pragma once

#include <complex>
#include <vector>

#include "cliff/gamma.hpp"
#include "cliff/signature.hpp"

namespace cliff {

/// Regular periodic lattice over a torus, one axis per generator direction.
struct Grid {
  std::vector<int> sizes;      // points per axis
  std::vector<double> spacing; // h per axis

  int dims() const { return static_cast<int>(sizes.size()); }
  std::size_t sites() const {
    std::size_t s = 1;
    for (int v : sizes) s *= static_cast<std::size_t>(v);
    return s;
  }
  /// Row-major site index, first axis slowest.
  std::size_t index(const std::vector<int>& coords) const;
  std::vector<int> coords(std::size_t index) const;
  /// Neighbor site index with coordinate `axis` shifted by `step`, periodic.
  std::size_t neighbor(std::size_t index, int axis, int step) const;
};

/// Orthonormal frame data: per-site n x n matrix e_a^mu (row a, column mu).
struct FrameField {
  Grid grid;
  Signature signature;
  std::vector<double> vielbein;  // sites * n * n, row-major per site

  double e(std::size_t site, int a, int mu) const {
    int n = signature.n();
    return vielbein[(site * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)) *
                        static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(mu)];
  }

  static FrameField flat(const Grid& grid, const Signature& sig);
};

/// Metric-connection coefficients Gamma^a_{b mu} per site; values must lie in
/// the pseudo-orthogonal Lie algebra (antisymmetric after index lowering).
struct ConnectionField {
  Grid grid;
  Signature signature;
  std::vector<double> coeffs;  // sites * n * n * n, (a, b, mu) row-major per site

  double gamma(std::size_t site, int a, int b, int mu) const {
    int n = signature.n();
    std::size_t nn = static_cast<std::size_t>(n);
    return coeffs[((site * nn + static_cast<std::size_t>(a)) * nn + static_cast<std::size_t>(b)) * nn +
                  static_cast<std::size_t>(mu)];
  }

  static ConnectionField zero(const Grid& grid, const Signature& sig);
  /// Throws when some lowered slice fails antisymmetry.
  void validate(double tolerance = 1e-12) const;
};

/// Per-site spinor values, f complex components each.
struct SpinorField {
  Grid grid;
  Signature signature;
  int f = 1;
  std::vector<std::complex<double>> values;  // sites * f

  std::complex<double>& at(std::size_t site, int c) { return values[site * static_cast<std::size_t>(f) + static_cast<std::size_t>(c)]; }
  const std::complex<double>& at(std::size_t site, int c) const {
    return values[site * static_cast<std::size_t>(f) + static_cast<std::size_t>(c)];
  }

  static SpinorField zero(const Grid& grid, const Signature& sig, int f);
  /// psi0 * exp(i k.x) with x in lattice units times spacing.
  static SpinorField plane_wave(const Grid& grid, const Signature& sig,
                                const std::vector<std::complex<double>>& psi0,
                                const std::vector<double>& k);
};

/// Lift of a pseudo-orthogonal Lie algebra matrix M^a_b to the spinor
/// representation: (1/4) M_ab gamma^a gamma^b summed over all index pairs.
/// Throws when the lowered matrix is not antisymmetric within tolerance.
std::vector<std::complex<double>> lift_to_spin(const std::vector<double>& m,
                                               const GammaRepresentation& rep,
                                               double tolerance = 1e-12);

/// Covariant derivative along frame direction a: e_a^mu (central difference
/// along mu + spin-connection term).
SpinorField covariant_derivative(const SpinorField& psi, const ConnectionField& conn,
                                 const FrameField& frame, int a, const GammaRepresentation& rep);

/// Dirac operator: gamma^a contracted with the covariant derivative.
SpinorField dirac_operator(const SpinorField& psi, const ConnectionField& conn,
                           const FrameField& frame, const GammaRepresentation& rep);

}  // namespace cliff
