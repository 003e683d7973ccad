#include "cliff/spin_group.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace cliff {

namespace {

double max_abs_coeff(const Md& m) {
  double v = 0;
  for (const auto& [mask, c] : m.terms()) v = std::max(v, std::abs(c));
  return v;
}

/// Parity of the grade support; throws when even and odd grades mix.
int support_parity(const Md& m) {
  bool has_even = false, has_odd = false;
  for (const auto& [mask, c] : m.terms()) (blade_grade(mask) % 2 ? has_odd : has_even) = true;
  if (has_even && has_odd)
    throw std::domain_error("element mixes even and odd grades; not in Pin");
  return has_odd ? 1 : 0;
}

int element_parity(const SpinElement& s) {
  if (s.factor_parity) {
    int p = *s.factor_parity;
    if (p != 0 && p != 1) throw std::invalid_argument("factor parity must be 0 or 1");
    return p;
  }
  return support_parity(s.value);
}

/// bar(s) s reduced to its scalar value; throws when it is not scalar.
double spinor_norm(const Md& s, double tolerance) {
  Md m = bar(s) * s;
  double scale = std::max(1.0, max_abs_coeff(m));
  double off = 0;
  for (const auto& [mask, c] : m.terms())
    if (mask != 0) off = std::max(off, std::abs(c));
  if (off > tolerance * scale)
    throw std::domain_error("bar(s) s is not scalar; not expressible in Pin normal form");
  return m.scalar_part();
}

}  // namespace

std::string component_label(GroupComponent c) {
  switch (c) {
    case GroupComponent::PlusUp: return "L+up";
    case GroupComponent::PlusDown: return "L+down";
    case GroupComponent::MinusUp: return "L-up";
    case GroupComponent::MinusDown: return "L-down";
    case GroupComponent::Plus: return "L+";
    case GroupComponent::Minus: return "L-";
  }
  return "?";
}

Md multivector_inverse(const Md& s, double tolerance) {
  const Signature& sig = s.signature();
  const int dim = static_cast<int>(sig.dim());
  // Left-multiplication operator of s in the blade basis.
  Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [ms, cs] : s.terms()) {
    for (BladeMask b = 0; b < static_cast<BladeMask>(dim); ++b) {
      int sign = blade_product_sign(ms, b, sig);
      lhs(static_cast<int>(ms ^ b), static_cast<int>(b)) += sign * cs;
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(lhs);
  lu.setThreshold(tolerance);
  if (!lu.isInvertible()) throw std::domain_error("element is not invertible");
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(dim);
  unit(0) = 1.0;
  Eigen::VectorXd x = lu.solve(unit);
  Md inv(sig);
  for (int b = 0; b < dim; ++b)
    if (x(b) != 0.0) inv.add_term(static_cast<BladeMask>(b), x(b));
  return inv;
}

OrthogonalMatrix chi(const SpinElement& s, double tolerance) {
  const Signature& sig = s.value.signature();
  const int n = sig.n();
  Md inv = multivector_inverse(s.value, tolerance);

  OrthogonalMatrix lambda;
  lambda.signature = sig;
  lambda.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int mu = 0; mu < n; ++mu) {
    Md conj = s.value * Md::generator(sig, mu) * inv;
    double scale = std::max(1.0, max_abs_coeff(conj));
    for (const auto& [mask, c] : conj.terms()) {
      if (blade_grade(mask) == 1) {
        int nu = blade_indices(mask)[0];
        lambda.entries[static_cast<std::size_t>(nu) * n + mu] = c;
      } else if (std::abs(c) > tolerance * scale) {
        throw std::domain_error("conjugation leaves the generator span: not in Clifford group");
      }
    }
  }

  // Metric preservation.
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0;
      for (int k = 0; k < n; ++k) acc += lambda.at(k, i) * sig.metric_sign(k) * lambda.at(k, j);
      double expect = i == j ? sig.metric_sign(i) : 0.0;
      worst = std::max(worst, std::abs(acc - expect));
    }
  double scale = 1.0;
  for (double v : lambda.entries) scale = std::max(scale, v * v);
  if (worst > tolerance * scale)
    throw std::domain_error("conjugation does not preserve the metric; not in Clifford group");

  // Component: properness from the factor parity, time orientation from the
  // determinant of the block acting on the negative-square directions.
  int parity = element_parity(s);
  if (sig.p == 0 || sig.q == 0) {
    lambda.component = parity == 0 ? GroupComponent::Plus : GroupComponent::Minus;
  } else {
    Eigen::MatrixXd tblock(sig.q, sig.q);
    for (int i = 0; i < sig.q; ++i)
      for (int j = 0; j < sig.q; ++j) tblock(i, j) = lambda.at(sig.p + i, sig.p + j);
    bool up = tblock.determinant() > 0;
    if (parity == 0)
      lambda.component = up ? GroupComponent::PlusUp : GroupComponent::PlusDown;
    else
      lambda.component = up ? GroupComponent::MinusUp : GroupComponent::MinusDown;
  }
  return lambda;
}

SpinElement pin_normalize(const SpinElement& s, double tolerance) {
  double norm = spinor_norm(s.value, tolerance);
  if (std::abs(norm) < tolerance)
    throw std::domain_error("bar(s) s vanishes; not expressible in Pin normal form");
  SpinElement out = s;
  out.value = s.value * (1.0 / std::sqrt(std::abs(norm)));
  out.pin_norm_sign = norm > 0 ? +1 : -1;
  return out;
}

GroupComponent component_of(const SpinElement& s, double tolerance) {
  int parity = element_parity(s);
  int sign = s.pin_norm_sign ? *s.pin_norm_sign : (spinor_norm(s.value, tolerance) > 0 ? +1 : -1);
  const Signature& sig = s.value.signature();
  if (sig.p == 0 || sig.q == 0)
    return parity == 0 ? GroupComponent::Plus : GroupComponent::Minus;
  if (parity == 0) return sign > 0 ? GroupComponent::PlusUp : GroupComponent::PlusDown;
  return sign > 0 ? GroupComponent::MinusUp : GroupComponent::MinusDown;
}

Md exp_series(const Md& x) {
  const Signature& sig = x.signature();
  // Scale down until the series converges comfortably, then square back.
  int squarings = 0;
  double norm = max_abs_coeff(x);
  Md scaled = x;
  while (norm > 0.5 && squarings < 60) {
    scaled *= 0.5;
    norm *= 0.5;
    ++squarings;
  }
  Md sum = Md::scalar(sig, 1.0);
  Md term = Md::scalar(sig, 1.0);
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled;
    term *= 1.0 / k;
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

SpinElement exp_bivector(const Md& b) {
  const Signature& sig = b.signature();
  for (const auto& [mask, c] : b.terms())
    if (blade_grade(mask) != 2)
      throw std::invalid_argument("exp_bivector requires a grade-2 element");

  SpinElement out;
  out.factor_parity = 0;
  if (b.is_zero()) {
    out.value = Md::scalar(sig, 1.0);
    return out;
  }

  Md sq = b * b;
  double sigma = sq.scalar_part();
  double off = 0;
  for (const auto& [mask, c] : sq.terms())
    if (mask != 0) off = std::max(off, std::abs(c));

  if (off < 1e-12 * std::max(1.0, std::abs(sigma))) {
    // b^2 is scalar: cosh/sinh for sigma > 0, cos/sin for sigma < 0.
    double c, k;
    if (std::abs(sigma) < 1e-8) {
      c = 1.0 + sigma / 2.0;
      k = 1.0 + sigma / 6.0;
    } else if (sigma > 0) {
      double r = std::sqrt(sigma);
      c = std::cosh(r);
      k = std::sinh(r) / r;
    } else {
      double r = std::sqrt(-sigma);
      c = std::cos(r);
      k = std::sin(r) / r;
    }
    out.value = Md::scalar(sig, c) + b * k;
  } else {
    out.value = exp_series(b);
  }
  return out;
}

std::vector<Md> lie_algebra_basis(const Signature& sig) {
  if (sig.n() < 2) throw std::domain_error("the bivector basis needs n >= 2");
  std::vector<Md> basis;
  for (int mu = 0; mu < sig.n(); ++mu)
    for (int nu = mu + 1; nu < sig.n(); ++nu)
      basis.push_back(Md::blade(sig, (BladeMask{1} << mu) | (BladeMask{1} << nu), 1.0));
  return basis;
}

Md vector_element(const Signature& sig, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != sig.n())
    throw std::invalid_argument("coordinate count does not match the signature");
  Md m(sig);
  for (int mu = 0; mu < sig.n(); ++mu)
    if (v[static_cast<std::size_t>(mu)] != 0.0)
      m.add_term(BladeMask{1} << mu, v[static_cast<std::size_t>(mu)]);
  return m;
}

SpinElement spin_element_from_vectors(const Signature& sig,
                                      const std::vector<std::vector<double>>& vectors) {
  SpinElement s;
  s.value = Md::scalar(sig, 1.0);
  for (const auto& v : vectors) s.value = s.value * vector_element(sig, v);
  s.factor_parity = static_cast<int>(vectors.size() % 2);
  return s;
}

}  // namespace cliff
