#include "cliff/spin_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace cliff {

namespace {

using Cd = std::complex<double>;

void check_same_grid(const Grid& a, const Grid& b) {
  if (a.sizes != b.sizes || a.spacing != b.spacing)
    throw std::invalid_argument("field grids do not match");
}

std::vector<Cd> gamma_tables(const GammaRepresentation& rep) {
  std::vector<Cd> g;
  const std::size_t f2 = static_cast<std::size_t>(rep.f) * rep.f;
  g.reserve(rep.gammas.size() * f2);
  for (const CMatrix& m : rep.gammas) {
    auto c = m.to_complex();
    g.insert(g.end(), c.begin(), c.end());
  }
  return g;
}

}  // namespace

std::size_t Grid::index(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != dims()) throw std::invalid_argument("coordinate rank mismatch");
  std::size_t idx = 0;
  for (int d = 0; d < dims(); ++d) {
    int v = c[static_cast<std::size_t>(d)];
    if (v < 0 || v >= sizes[static_cast<std::size_t>(d)]) throw std::out_of_range("site outside grid");
    idx = idx * static_cast<std::size_t>(sizes[static_cast<std::size_t>(d)]) + static_cast<std::size_t>(v);
  }
  return idx;
}

std::vector<int> Grid::coords(std::size_t index) const {
  std::vector<int> c(static_cast<std::size_t>(dims()));
  for (int d = dims() - 1; d >= 0; --d) {
    int size = sizes[static_cast<std::size_t>(d)];
    c[static_cast<std::size_t>(d)] = static_cast<int>(index % static_cast<std::size_t>(size));
    index /= static_cast<std::size_t>(size);
  }
  return c;
}

std::size_t Grid::neighbor(std::size_t index, int axis, int step) const {
  // Strides are products of the trailing sizes.
  std::size_t stride = 1;
  for (int d = dims() - 1; d > axis; --d) stride *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(d)]);
  int size = sizes[static_cast<std::size_t>(axis)];
  std::size_t block = stride * static_cast<std::size_t>(size);
  std::size_t base = index - index % block;
  std::size_t within = index - base;
  int coord = static_cast<int>(within / stride);
  int wrapped = ((coord + step) % size + size) % size;
  return base + static_cast<std::size_t>(wrapped) * stride + within % stride;
}

FrameField FrameField::flat(const Grid& grid, const Signature& sig) {
  if (grid.dims() != sig.n()) throw std::invalid_argument("grid rank must equal the signature dimension");
  FrameField f{grid, sig, {}};
  const int n = sig.n();
  f.vielbein.assign(grid.sites() * static_cast<std::size_t>(n) * n, 0.0);
  for (std::size_t s = 0; s < grid.sites(); ++s)
    for (int a = 0; a < n; ++a)
      f.vielbein[(s * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)) * n +
                 static_cast<std::size_t>(a)] = 1.0;
  return f;
}

ConnectionField ConnectionField::zero(const Grid& grid, const Signature& sig) {
  ConnectionField c{grid, sig, {}};
  const std::size_t n = static_cast<std::size_t>(sig.n());
  c.coeffs.assign(grid.sites() * n * n * n, 0.0);
  return c;
}

void ConnectionField::validate(double tolerance) const {
  const int n = signature.n();
  for (std::size_t s = 0; s < grid.sites(); ++s)
    for (int mu = 0; mu < n; ++mu)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          double lowered_ab = signature.metric_sign(a) * gamma(s, a, b, mu);
          double lowered_ba = signature.metric_sign(b) * gamma(s, b, a, mu);
          if (std::abs(lowered_ab + lowered_ba) > tolerance)
            throw std::invalid_argument("connection is not antisymmetric after index lowering");
        }
}

SpinorField SpinorField::zero(const Grid& grid, const Signature& sig, int f) {
  SpinorField out{grid, sig, f, {}};
  out.values.assign(grid.sites() * static_cast<std::size_t>(f), Cd(0.0));
  return out;
}

SpinorField SpinorField::plane_wave(const Grid& grid, const Signature& sig,
                                    const std::vector<Cd>& psi0, const std::vector<double>& k) {
  if (static_cast<int>(k.size()) != grid.dims()) throw std::invalid_argument("wave vector rank mismatch");
  SpinorField out{grid, sig, static_cast<int>(psi0.size()), {}};
  out.values.resize(grid.sites() * psi0.size());
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    auto c = grid.coords(s);
    double phase = 0;
    for (int d = 0; d < grid.dims(); ++d)
      phase += k[static_cast<std::size_t>(d)] * c[static_cast<std::size_t>(d)] *
               grid.spacing[static_cast<std::size_t>(d)];
    Cd factor = std::polar(1.0, phase);
    for (std::size_t i = 0; i < psi0.size(); ++i) out.values[s * psi0.size() + i] = psi0[i] * factor;
  }
  return out;
}

std::vector<Cd> lift_to_spin(const std::vector<double>& m, const GammaRepresentation& rep,
                             double tolerance) {
  const int n = rep.signature.n();
  if (static_cast<int>(m.size()) != n * n) throw std::invalid_argument("lift_to_spin: matrix rank mismatch");
  const int f = rep.f;
  const std::size_t f2 = static_cast<std::size_t>(f) * f;

  // Lower the first index and demand antisymmetry.
  std::vector<double> lowered(m.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      lowered[static_cast<std::size_t>(a) * n + b] =
          rep.signature.metric_sign(a) * m[static_cast<std::size_t>(a) * n + b];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (std::abs(lowered[static_cast<std::size_t>(a) * n + b] +
                   lowered[static_cast<std::size_t>(b) * n + a]) > tolerance)
        throw std::invalid_argument("lift_to_spin: matrix is not in the pseudo-orthogonal Lie algebra");

  std::vector<Cd> gammas = gamma_tables(rep);
  std::vector<Cd> out(f2, Cd(0.0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double coeff = 0.25 * lowered[static_cast<std::size_t>(a) * n + b];
      if (coeff == 0.0) continue;
      // gamma^a gamma^b accumulated entrywise.
      const Cd* ga = gammas.data() + static_cast<std::size_t>(a) * f2;
      const Cd* gb = gammas.data() + static_cast<std::size_t>(b) * f2;
      for (int i = 0; i < f; ++i)
        for (int kk = 0; kk < f; ++kk) {
          Cd v = ga[static_cast<std::size_t>(i) * f + kk];
          if (v == Cd(0.0)) continue;
          for (int j = 0; j < f; ++j)
            out[static_cast<std::size_t>(i) * f + j] += coeff * v * gb[static_cast<std::size_t>(kk) * f + j];
        }
    }
  return out;
}

namespace {

/// Per-site covariant derivatives for every frame index at once.
/// row layout: nabla[a] is an f-vector.
void site_covariant(const SpinorField& psi, const ConnectionField& conn, const FrameField& frame,
                    const GammaRepresentation& rep, std::size_t site, bool conn_nonzero,
                    std::vector<Cd>& nabla /* n * f */) {
  const int n = rep.signature.n();
  const int f = rep.f;
  const Grid& grid = psi.grid;

  // d_mu psi by central differences, then the connection term, both per mu.
  std::vector<Cd> dmu(static_cast<std::size_t>(n) * f);
  for (int mu = 0; mu < n; ++mu) {
    std::size_t up = grid.neighbor(site, mu, +1);
    std::size_t down = grid.neighbor(site, mu, -1);
    double inv2h = 0.5 / grid.spacing[static_cast<std::size_t>(mu)];
    for (int c = 0; c < f; ++c)
      dmu[static_cast<std::size_t>(mu) * f + c] = (psi.at(up, c) - psi.at(down, c)) * inv2h;
    if (conn_nonzero) {
      std::vector<double> slice(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          slice[static_cast<std::size_t>(a) * n + b] = conn.gamma(site, a, b, mu);
      auto lifted = lift_to_spin(slice, rep);
      for (int i = 0; i < f; ++i) {
        Cd acc(0.0);
        for (int j = 0; j < f; ++j) acc += lifted[static_cast<std::size_t>(i) * f + j] * psi.at(site, j);
        dmu[static_cast<std::size_t>(mu) * f + i] += acc;
      }
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < f; ++c) nabla[static_cast<std::size_t>(a) * f + c] = Cd(0.0);
    for (int mu = 0; mu < n; ++mu) {
      double e = frame.e(site, a, mu);
      if (e == 0.0) continue;
      for (int c = 0; c < f; ++c)
        nabla[static_cast<std::size_t>(a) * f + c] += e * dmu[static_cast<std::size_t>(mu) * f + c];
    }
  }
}

void check_shapes(const SpinorField& psi, const ConnectionField& conn, const FrameField& frame,
                  const GammaRepresentation& rep) {
  check_same_grid(psi.grid, conn.grid);
  check_same_grid(psi.grid, frame.grid);
  if (psi.signature != rep.signature || conn.signature != rep.signature ||
      frame.signature != rep.signature)
    throw std::invalid_argument("field signatures do not match the representation");
  if (psi.f != rep.f) throw std::invalid_argument("spinor component count does not match f");
  if (psi.grid.dims() != rep.signature.n())
    throw std::invalid_argument("grid rank must equal the signature dimension");
}

bool any_nonzero(const std::vector<double>& v) {
  for (double x : v)
    if (x != 0.0) return true;
  return false;
}

}  // namespace

SpinorField covariant_derivative(const SpinorField& psi, const ConnectionField& conn,
                                 const FrameField& frame, int a, const GammaRepresentation& rep) {
  check_shapes(psi, conn, frame, rep);
  const int n = rep.signature.n();
  if (a < 0 || a >= n) throw std::out_of_range("frame index outside signature");
  const int f = rep.f;
  bool conn_nonzero = any_nonzero(conn.coeffs);
  SpinorField out = SpinorField::zero(psi.grid, psi.signature, f);
  std::vector<Cd> nabla(static_cast<std::size_t>(n) * f);
  for (std::size_t site = 0; site < psi.grid.sites(); ++site) {
    site_covariant(psi, conn, frame, rep, site, conn_nonzero, nabla);
    for (int c = 0; c < f; ++c) out.at(site, c) = nabla[static_cast<std::size_t>(a) * f + c];
  }
  return out;
}

SpinorField dirac_operator(const SpinorField& psi, const ConnectionField& conn,
                           const FrameField& frame, const GammaRepresentation& rep) {
  check_shapes(psi, conn, frame, rep);
  const int n = rep.signature.n();
  const int f = rep.f;
  bool conn_nonzero = any_nonzero(conn.coeffs);
  std::vector<Cd> gammas = gamma_tables(rep);
  const std::size_t f2 = static_cast<std::size_t>(f) * f;

  SpinorField out = SpinorField::zero(psi.grid, psi.signature, f);
  std::vector<Cd> nabla(static_cast<std::size_t>(n) * f);
  for (std::size_t site = 0; site < psi.grid.sites(); ++site) {
    site_covariant(psi, conn, frame, rep, site, conn_nonzero, nabla);
    for (int a = 0; a < n; ++a) {
      const Cd* g = gammas.data() + static_cast<std::size_t>(a) * f2;
      for (int i = 0; i < f; ++i) {
        Cd acc(0.0);
        for (int j = 0; j < f; ++j) acc += g[static_cast<std::size_t>(i) * f + j] *
                                           nabla[static_cast<std::size_t>(a) * f + j];
        out.at(site, i) += acc;
      }
    }
  }
  return out;
}

}  // namespace cliff
