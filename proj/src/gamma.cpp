#include "cliff/gamma.hpp"

#include <random>
#include <stdexcept>

#include "cliff/blades.hpp"
#include "cliff/classify.hpp"
#include "cliff/exact_linalg.hpp"

namespace cliff {

// --- CMatrix ---------------------------------------------------------------

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

bool CMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

CMatrix CMatrix::operator-() const {
  CMatrix r = *this;
  for (auto& v : r.a_) v = -v;
  return r;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(const GaussianRational& s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  CMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

CMatrix CMatrix::conj() const {
  CMatrix r = *this;
  for (auto& v : r.a_) v = v.conj();
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

GaussianRational CMatrix::trace() const {
  GaussianRational t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

CMatrix CMatrix::kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int ia = 0; ia < a.rows_; ++ia)
    for (int ja = 0; ja < a.cols_; ++ja) {
      if (a.at(ia, ja).is_zero()) continue;
      for (int ib = 0; ib < b.rows_; ++ib)
        for (int jb = 0; jb < b.cols_; ++jb)
          r.at(ia * b.rows_ + ib, ja * b.cols_ + jb) = a.at(ia, ja) * b.at(ib, jb);
    }
  return r;
}

std::vector<std::complex<double>> CMatrix::to_complex() const {
  std::vector<std::complex<double>> out(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) out[i] = a_[i].to_complex();
  return out;
}

// --- representation construction --------------------------------------------

namespace {

GaussianRational gq(int re, int im = 0) { return {Rational(re), Rational(im)}; }

CMatrix mat2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d) {
  CMatrix m(2, 2);
  m.at(0, 0) = std::move(a);
  m.at(0, 1) = std::move(b);
  m.at(1, 0) = std::move(c);
  m.at(1, 1) = std::move(d);
  return m;
}

/// Peels one two-dimensional factor per level: the factor's generators act as
/// A (x) 1 and B (x) 1, the residual generators as eps_E (x) gamma, with the
/// residual metric rescaled by eps_E^2. Seeds are fixed so that every matrix
/// is purely real or purely imaginary.
std::vector<CMatrix> build_gammas(int p, int q) {
  const int n = p + q;
  if (n == 0) return {};
  if (n == 1) {
    CMatrix m(1, 1);
    m.at(0, 0) = p == 1 ? gq(1) : gq(0, 1);
    return {m};
  }

  // A (1,1) or (2,0) or (0,2) pair is peeled; eps_E^2 = -1 for the pure pairs,
  // which flips the residual metric (rest_p/rest_q below are post-flip).
  CMatrix a2, b2;
  int rest_p, rest_q;
  if (p >= 1 && q >= 1) {
    a2 = mat2(gq(0), gq(1), gq(1), gq(0));
    b2 = mat2(gq(0), gq(1), gq(-1), gq(0));
    rest_p = p - 1;
    rest_q = q - 1;
  } else if (p >= 2) {
    a2 = mat2(gq(1), gq(0), gq(0), gq(-1));
    b2 = mat2(gq(0), gq(1), gq(1), gq(0));
    rest_p = 0;
    rest_q = p - 2;
  } else {
    a2 = mat2(gq(0, 1), gq(0), gq(0), gq(0, -1));
    b2 = mat2(gq(0), gq(0, 1), gq(0, 1), gq(0));
    rest_p = q - 2;
    rest_q = 0;
  }
  CMatrix eps = a2 * b2;

  std::vector<CMatrix> rest = build_gammas(rest_p, rest_q);
  const int f_rest = rest.empty() ? 1 : rest[0].rows();
  CMatrix id_rest = CMatrix::identity(f_rest);

  // Assemble plus-square generators first, then minus-square, preserving the
  // residual order within each block.
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<CMatrix> lifted;
  lifted.reserve(rest.size());
  for (const CMatrix& r : rest) lifted.push_back(CMatrix::kron(eps, r));

  if (p >= 1 && q >= 1) {
    out.push_back(CMatrix::kron(a2, id_rest));
    for (int i = 0; i < rest_p; ++i) out.push_back(lifted[static_cast<std::size_t>(i)]);
    out.push_back(CMatrix::kron(b2, id_rest));
    for (int i = 0; i < rest_q; ++i) out.push_back(lifted[static_cast<std::size_t>(rest_p + i)]);
  } else {
    // Pure signatures: the peeled pair and the (metric-flipped) residual all
    // carry the same square sign.
    out.push_back(CMatrix::kron(a2, id_rest));
    out.push_back(CMatrix::kron(b2, id_rest));
    for (const CMatrix& l : lifted) out.push_back(l);
  }
  return out;
}

CMatrix scalar_matrix(int f, const GaussianRational& s) {
  CMatrix m(f, f);
  for (int i = 0; i < f; ++i) m.at(i, i) = s;
  return m;
}

void verify_relations(const GammaRepresentation& rep) {
  const Signature& sig = rep.signature;
  CMatrix id = CMatrix::identity(rep.f);
  for (int mu = 0; mu < sig.n(); ++mu) {
    for (int nu = mu; nu < sig.n(); ++nu) {
      CMatrix anti = rep.gammas[mu] * rep.gammas[nu] + rep.gammas[nu] * rep.gammas[mu];
      CMatrix expect = mu == nu ? scalar_matrix(rep.f, gq(2 * sig.metric_sign(mu))) : CMatrix(rep.f, rep.f);
      if (anti != expect)
        throw std::logic_error("gamma construction broke the defining relations at " + sig.str());
    }
  }
}

// --- monomial machinery for the conjugation solve ---------------------------

/// Generalized permutation matrix: column j holds i^phase[j] at row perm[j].
/// Every blade matrix has this form.
struct Monomial {
  std::vector<int> perm;
  std::vector<int> phase;  // exponent of i, mod 4

  static Monomial identity(int f) {
    Monomial m;
    m.perm.resize(static_cast<std::size_t>(f));
    m.phase.assign(static_cast<std::size_t>(f), 0);
    for (int j = 0; j < f; ++j) m.perm[static_cast<std::size_t>(j)] = j;
    return m;
  }

  int size() const { return static_cast<int>(perm.size()); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    const std::size_t f = a.perm.size();
    r.perm.resize(f);
    r.phase.resize(f);
    for (std::size_t j = 0; j < f; ++j) {
      int k = b.perm[j];
      r.perm[j] = a.perm[static_cast<std::size_t>(k)];
      r.phase[j] = (a.phase[static_cast<std::size_t>(k)] + b.phase[j]) % 4;
    }
    return r;
  }
};

Monomial monomial_from_matrix(const CMatrix& m) {
  Monomial r;
  const int f = m.rows();
  r.perm.assign(static_cast<std::size_t>(f), -1);
  r.phase.assign(static_cast<std::size_t>(f), 0);
  for (int j = 0; j < f; ++j) {
    int found = -1, ph = 0;
    for (int i = 0; i < f; ++i) {
      const GaussianRational& v = m.at(i, j);
      if (v.is_zero()) continue;
      if (found >= 0) throw std::logic_error("gamma matrix is not monomial");
      found = i;
      if (v == gq(1)) ph = 0;
      else if (v == gq(0, 1)) ph = 1;
      else if (v == gq(-1)) ph = 2;
      else if (v == gq(0, -1)) ph = 3;
      else throw std::logic_error("gamma matrix entry is not a fourth root of unity");
    }
    if (found < 0) throw std::logic_error("gamma matrix has an empty column");
    r.perm[static_cast<std::size_t>(j)] = found;
    r.phase[static_cast<std::size_t>(j)] = ph;
  }
  return r;
}

GaussianRational phase_value(int ph) {
  switch (((ph % 4) + 4) % 4) {
    case 0: return gq(1);
    case 1: return gq(0, 1);
    case 2: return gq(-1);
    default: return gq(0, -1);
  }
}

/// Group-averaging projector onto the intertwiner space of the channel:
/// C = sum_B rho(B) X rho'(B)^-1 with rho'(gamma) = eta * conj(gamma).
/// Any nonzero result solves C gamma* = eta gamma C.
CMatrix average_intertwiner(const GammaRepresentation& rep, int eta, const std::vector<int>& x_entries) {
  const int f = rep.f;
  const int n = rep.signature.n();
  const std::size_t blades = std::size_t{1} << n;

  // rho(B) for every blade, built by gray-style extension over the lowest bit.
  std::vector<Monomial> rho(blades);
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (const CMatrix& g : rep.gammas) gens.push_back(monomial_from_matrix(g));
  rho[0] = Monomial::identity(f);
  for (std::size_t b = 1; b < blades; ++b) {
    int low = std::countr_zero(b);
    rho[b] = gens[static_cast<std::size_t>(low)] * rho[b & (b - 1)];
  }

  CMatrix c(f, f);
  for (std::size_t b = 0; b < blades; ++b) {
    const Monomial& m = rho[b];
    // rho'(B)^-1 = eta^grade * square_sign * conj(rho(B)); conjugation negates
    // the phase exponents.
    int grade = blade_grade(static_cast<BladeMask>(b));
    int sq = blade_square_sign(static_cast<BladeMask>(b), rep.signature);
    int global = (eta < 0 && grade % 2 == 1 ? 2 : 0) + (sq < 0 ? 2 : 0);
    for (int r = 0; r < f; ++r) {
      int row = m.perm[static_cast<std::size_t>(r)];
      for (int j = 0; j < f; ++j) {
        int col = m.perm[static_cast<std::size_t>(j)];
        int ph = m.phase[static_cast<std::size_t>(r)] - m.phase[static_cast<std::size_t>(j)] + global;
        c.at(row, j) += phase_value(ph) * gq(x_entries[static_cast<std::size_t>(r * f) + col]);
      }
    }
  }
  return c;
}

bool intertwines(const GammaRepresentation& rep, const CMatrix& c, int eta) {
  for (const CMatrix& g : rep.gammas) {
    CMatrix lhs = c * g.conj();
    CMatrix rhs = g * c;
    if (eta < 0) rhs = -rhs;
    if (lhs != rhs) return false;
  }
  return true;
}

/// Real 2f x 2f matrix of the antilinear map psi -> M psi* acting on
/// (Re psi, Im psi).
QMatrix antilinear_real_form(const CMatrix& m) {
  const int f = m.rows();
  QMatrix t(2 * static_cast<std::size_t>(f), std::vector<GaussianRational>(2 * static_cast<std::size_t>(f)));
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) {
      const GaussianRational& v = m.at(i, j);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = GaussianRational(v.re);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(f + j)] = GaussianRational(v.im);
      t[static_cast<std::size_t>(f + i)][static_cast<std::size_t>(j)] = GaussianRational(v.im);
      t[static_cast<std::size_t>(f + i)][static_cast<std::size_t>(f + j)] = GaussianRational(-v.re);
    }
  return t;
}

/// Real 2f x 2f form of the linear map psi -> M psi.
QMatrix linear_real_form(const CMatrix& m) {
  const int f = m.rows();
  QMatrix t(2 * static_cast<std::size_t>(f), std::vector<GaussianRational>(2 * static_cast<std::size_t>(f)));
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) {
      const GaussianRational& v = m.at(i, j);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = GaussianRational(v.re);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(f + j)] = GaussianRational(-v.im);
      t[static_cast<std::size_t>(f + i)][static_cast<std::size_t>(j)] = GaussianRational(v.im);
      t[static_cast<std::size_t>(f + i)][static_cast<std::size_t>(f + j)] = GaussianRational(v.re);
    }
  return t;
}

}  // namespace

GammaRepresentation build_representation(const Signature& sig) {
  GammaRepresentation rep;
  rep.signature = sig;
  rep.gammas = build_gammas(sig.p, sig.q);
  rep.f = rep.gammas.empty() ? 1 : rep.gammas[0].rows();
  rep.epsilon_matrix = CMatrix::identity(rep.f);
  for (const CMatrix& g : rep.gammas) rep.epsilon_matrix = rep.epsilon_matrix * g;
  verify_relations(rep);
  return rep;
}

CMatrix chirality(const GammaRepresentation& rep) {
  if (rep.signature.n() % 2 != 0)
    throw std::domain_error("chirality is defined only when n is even (requested " +
                            rep.signature.str() + ")");
  CMatrix theta = rep.epsilon_matrix;
  if (epsilon_square_sign(rep.signature.p, rep.signature.q) < 0) theta *= gq(0, 1);
  if (theta * theta != CMatrix::identity(rep.f))
    throw std::logic_error("chirality operator does not square to one");
  return theta;
}

std::pair<SpinorVector, SpinorVector> weyl_split(const GammaRepresentation& rep,
                                                 const SpinorVector& psi) {
  if (rep.signature.n() % 2 != 0)
    throw std::domain_error("Weyl split requires n even (requested " + rep.signature.str() + ")");
  if (static_cast<int>(psi.components.size()) != rep.f)
    throw std::invalid_argument("spinor length does not match the representation");
  auto theta = chirality(rep).to_complex();
  SpinorVector left{psi.signature, std::vector<std::complex<double>>(psi.components.size())};
  SpinorVector right = left;
  for (int i = 0; i < rep.f; ++i) {
    std::complex<double> tpsi = 0;
    for (int j = 0; j < rep.f; ++j)
      tpsi += theta[static_cast<std::size_t>(i * rep.f + j)] * psi.components[static_cast<std::size_t>(j)];
    left.components[static_cast<std::size_t>(i)] = 0.5 * (psi.components[static_cast<std::size_t>(i)] - tpsi);
    right.components[static_cast<std::size_t>(i)] = 0.5 * (psi.components[static_cast<std::size_t>(i)] + tpsi);
  }
  return {left, right};
}

std::vector<ConjugationChannel> conjugation_channels(const GammaRepresentation& rep) {
  std::vector<ConjugationChannel> out;
  const int f = rep.f;
  std::mt19937_64 rng(4258);  // fixed probe seed; the result is verified exactly
  for (int eta : {+1, -1}) {
    CMatrix c;
    bool found = false;
    for (int attempt = 0; attempt < 3 && !found; ++attempt) {
      std::vector<int> x(static_cast<std::size_t>(f) * f);
      for (auto& v : x) v = static_cast<int>(rng() % 19) - 9;
      c = average_intertwiner(rep, eta, x);
      found = !c.is_zero();
    }
    if (!found) continue;
    if (!intertwines(rep, c, eta))
      throw std::logic_error("averaged conjugation candidate fails the intertwining equations");

    // Normalize: the intertwiner space is one-dimensional and contains a
    // monomial representative, so dividing by the first nonzero entry leaves
    // fourth-root-of-unity entries and C C* = +/- identity exactly.
    GaussianRational pivot;
    for (int i = 0; i < f * f && pivot.is_zero(); ++i) {
      const GaussianRational& v = c.at(i / f, i % f);
      if (!v.is_zero()) pivot = v;
    }
    CMatrix norm = c;
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j)
        if (!norm.at(i, j).is_zero()) norm.at(i, j) /= pivot;

    // Prefer a real matrix when a global phase can produce one.
    bool real_ok = true, imag_ok = true;
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j) {
        if (norm.at(i, j).im != 0) real_ok = false;
        if (norm.at(i, j).re != 0) imag_ok = false;
      }
    if (!real_ok && imag_ok) {
      norm *= gq(0, 1);
      real_ok = true;
    }

    CMatrix cc = norm * norm.conj();
    int c_squared;
    if (cc == CMatrix::identity(f))
      c_squared = +1;
    else if (cc == -CMatrix::identity(f))
      c_squared = -1;
    else
      throw std::logic_error("conjugation normalization failed: C C* is not a sign");

    ConjugationChannel channel{eta, norm, c_squared, 0};
    if (rep.signature.n() % 2 == 0) {
      CMatrix theta = chirality(rep);
      CMatrix lhs = channel.matrix * theta.conj();
      if (lhs == theta * channel.matrix)
        channel.theta_commute = +1;
      else if (lhs == -(theta * channel.matrix))
        channel.theta_commute = -1;
      else
        throw std::logic_error("conjugation neither commutes nor anticommutes with chirality");
    }
    out.push_back(std::move(channel));
  }
  return out;
}

std::optional<Conjugation> build_conjugation(const GammaRepresentation& rep) {
  auto channels = conjugation_channels(rep);
  if (channels.empty())
    throw std::logic_error("no conjugation channel admits solutions; construction bug");
  for (const auto& ch : channels)
    if (ch.c_squared == +1) return Conjugation{ch.matrix, ch.eta};
  return std::nullopt;
}

int majorana_subspace_dimension(const GammaRepresentation& rep, const CMatrix& conjugation) {
  if (conjugation * conjugation.conj() != CMatrix::identity(rep.f))
    throw std::invalid_argument("majorana subspace requires c^2 = +1");
  QMatrix t = antilinear_real_form(conjugation);
  for (std::size_t i = 0; i < t.size(); ++i) t[i][i] -= GaussianRational(1);
  return static_cast<int>(q_kernel(std::move(t)).size());
}

int majorana_subspace_dimension(const GammaRepresentation& rep,
                                const std::optional<Conjugation>& conjugation) {
  if (!conjugation)
    throw std::domain_error("no Majorana conjugation exists for signature " + rep.signature.str());
  return majorana_subspace_dimension(rep, conjugation->matrix);
}

int weyl_majorana_subspace_dimension(const GammaRepresentation& rep, const CMatrix& conjugation,
                                     int chirality_sign) {
  if (chirality_sign != +1 && chirality_sign != -1)
    throw std::invalid_argument("chirality sign must be +1 or -1");
  QMatrix fixed = antilinear_real_form(conjugation);
  for (std::size_t i = 0; i < fixed.size(); ++i) fixed[i][i] -= GaussianRational(1);
  QMatrix chi = linear_real_form(chirality(rep));
  for (std::size_t i = 0; i < chi.size(); ++i) chi[i][i] -= GaussianRational(chirality_sign);
  for (auto& row : chi) fixed.push_back(std::move(row));
  return static_cast<int>(q_kernel(std::move(fixed)).size());
}

CMatrix representation_matrix(const GammaRepresentation& rep, const Mq& element) {
  if (element.signature() != rep.signature)
    throw std::invalid_argument("element signature does not match the representation");
  CMatrix out(rep.f, rep.f);
  for (const auto& [mask, coeff] : element.terms()) {
    CMatrix blade = CMatrix::identity(rep.f);
    for (int mu : blade_indices(mask)) blade = blade * rep.gammas[static_cast<std::size_t>(mu)];
    out += blade * coeff;
  }
  return out;
}

std::vector<std::complex<double>> representation_matrix_d(const GammaRepresentation& rep,
                                                          const Md& element) {
  if (element.signature() != rep.signature)
    throw std::invalid_argument("element signature does not match the representation");
  const int f = rep.f;
  std::vector<std::complex<double>> out(static_cast<std::size_t>(f) * f, 0.0);
  for (const auto& [mask, coeff] : element.terms()) {
    CMatrix blade = CMatrix::identity(f);
    for (int mu : blade_indices(mask)) blade = blade * rep.gammas[static_cast<std::size_t>(mu)];
    auto bc = blade.to_complex();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeff * bc[i];
  }
  return out;
}

}  // namespace cliff
