#include <doctest.h>

#include <cmath>
#include <random>

#include "cliff/spin_group.hpp"

using namespace cliff;

namespace {

/// Random vector with |g(v,v)| = 1.
Md random_unit_vector(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::vector<double> v(static_cast<std::size_t>(sig.n()));
    double norm = 0;
    for (int mu = 0; mu < sig.n(); ++mu) {
      v[static_cast<std::size_t>(mu)] = u(rng);
      norm += sig.metric_sign(mu) * v[static_cast<std::size_t>(mu)] * v[static_cast<std::size_t>(mu)];
    }
    if (std::abs(norm) < 0.5) continue;  // stay away from the null cone
    double s = 1.0 / std::sqrt(std::abs(norm));
    for (auto& x : v) x *= s;
    return vector_element(sig, v);
  }
}

SpinElement random_vector_product(const Signature& sig, int k, std::mt19937_64& rng) {
  SpinElement s;
  s.value = Md::scalar(sig, 1.0);
  for (int i = 0; i < k; ++i) s.value = s.value * random_unit_vector(sig, rng);
  s.factor_parity = k % 2;
  return s;
}

double metric_residual(const OrthogonalMatrix& lambda) {
  const Signature& sig = lambda.signature;
  double worst = 0;
  for (int i = 0; i < sig.n(); ++i)
    for (int j = 0; j < sig.n(); ++j) {
      double acc = 0;
      for (int k = 0; k < sig.n(); ++k) acc += lambda.at(k, i) * sig.metric_sign(k) * lambda.at(k, j);
      worst = std::max(worst, std::abs(acc - (i == j ? sig.metric_sign(i) : 0.0)));
    }
  return worst;
}

}  // namespace

TEST_CASE("chi of a generator reflects the orthogonal directions") {
  Signature sig(2, 0);
  SpinElement s{Md::generator(sig, 0), 1, {}};
  OrthogonalMatrix lambda = chi(s);
  // gamma^0 x gamma^0^-1 fixes gamma^0 and negates gamma^1.
  CHECK(lambda.at(0, 0) == doctest::Approx(1.0));
  CHECK(lambda.at(1, 1) == doctest::Approx(-1.0));
  CHECK(std::abs(lambda.at(0, 1)) < 1e-14);
  CHECK(std::abs(lambda.at(1, 0)) < 1e-14);
  CHECK(lambda.component == GroupComponent::Minus);
}

TEST_CASE("chi of the identity") {
  Signature sig(3, 1);
  SpinElement one{Md::scalar(sig, 1.0), 0, {}};
  OrthogonalMatrix lambda = chi(one);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(lambda.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
  CHECK(lambda.component == GroupComponent::PlusUp);
}

TEST_CASE("chi rejects elements outside the Clifford group") {
  Signature sig(2, 0);
  // 1 + gamma^0 gamma^1 is invertible but conjugation by a generic even
  // element keeps vectors in the span; use a genuinely bad one: 1 + gamma^0.
  SpinElement bad{Md::scalar(sig, 1.0) + Md::generator(sig, 0) * 0.5, {}, {}};
  CHECK_THROWS_AS(chi(bad), std::domain_error);
}

TEST_CASE("boost in a mixed plane reproduces cosh/sinh columns") {
  Signature sig(3, 1);
  for (double beta : {0.1, 1.0, 3.0}) {
    // gamma^3 is the time-like generator; boost along axis 0.
    Md b = Md::blade(sig, 0b1001, -beta / 2);  // (beta/2) gamma^3 gamma^0
    SpinElement s = exp_bivector(b);
    CHECK(s.value.coefficient(0) == doctest::Approx(std::cosh(beta / 2)).epsilon(1e-12));
    OrthogonalMatrix lambda = chi(s, 1e-10);
    CHECK(std::abs(lambda.at(3, 3) - std::cosh(beta)) < 1e-12 * std::cosh(beta));
    CHECK(std::abs(lambda.at(0, 3) - std::sinh(beta)) < 1e-12 * std::cosh(beta));
    CHECK(std::abs(lambda.at(0, 0) - std::cosh(beta)) < 1e-12 * std::cosh(beta));
    CHECK(std::abs(lambda.at(3, 0) - std::sinh(beta)) < 1e-12 * std::cosh(beta));
    CHECK(lambda.at(1, 1) == doctest::Approx(1.0));
    CHECK(lambda.at(2, 2) == doctest::Approx(1.0));
    CHECK(lambda.component == GroupComponent::PlusUp);
  }
}

TEST_CASE("boost composition is additive in rapidity") {
  Signature sig(3, 1);
  auto boost = [&](double beta) { return exp_bivector(Md::blade(sig, 0b1001, -beta / 2)); };
  SpinElement b1 = boost(0.7), b2 = boost(1.9), b12 = boost(2.6);
  Md prod = b1.value * b2.value;
  for (const auto& [mask, c] : prod.terms())
    CHECK(std::abs(c - b12.value.coefficient(mask)) < 1e-12 * std::cosh(1.3));
}

TEST_CASE("rotation exhibits the double cover") {
  Signature sig(3, 0);
  // theta = pi: s = gamma^1 gamma^2, a half turn upstairs.
  SpinElement half = exp_bivector(Md::blade(sig, 0b110, M_PI / 2));
  CHECK(std::abs(half.value.scalar_part()) < 1e-12);
  CHECK(half.value.coefficient(0b110) == doctest::Approx(1.0));
  OrthogonalMatrix rot = chi(half);
  CHECK(rot.at(1, 1) == doctest::Approx(-1.0));
  CHECK(rot.at(2, 2) == doctest::Approx(-1.0));
  CHECK(rot.at(0, 0) == doctest::Approx(1.0));

  // theta = 2 pi: s = -1 while chi(s) is the identity.
  SpinElement full = exp_bivector(Md::blade(sig, 0b110, M_PI));
  CHECK(full.value.scalar_part() == doctest::Approx(-1.0));
  CHECK(std::abs(full.value.coefficient(0b110)) < 1e-12);
  OrthogonalMatrix ident = chi(full);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ident.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("pin normalization records the spinor norm sign") {
  SpinElement a{Md::generator(Signature(1, 0), 0) * 2.0, 1, {}};
  SpinElement an = pin_normalize(a);
  CHECK(an.value.coefficient(0b1) == doctest::Approx(1.0));
  CHECK(an.pin_norm_sign == +1);

  SpinElement b{Md::generator(Signature(3, 1), 3), 1, {}};
  CHECK(pin_normalize(b).pin_norm_sign == -1);  // bar(g3) g3 = g3 g3 = -1

  Signature s20(2, 0);
  SpinElement c{Md::generator(s20, 0) * Md::generator(s20, 1), 0, {}};
  CHECK(pin_normalize(c).pin_norm_sign == +1);

  SpinElement mixed{Md::scalar(s20, 1.0) + Md::generator(s20, 0), {}, {}};
  CHECK_THROWS_AS(pin_normalize(mixed), std::domain_error);
}

TEST_CASE("component_of implements the four-case table") {
  Signature sig(3, 1);
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 1 + static_cast<int>(rng() % 6);
    SpinElement s = random_vector_product(sig, k, rng);
    SpinElement sn = pin_normalize(s);
    GroupComponent comp = component_of(sn);
    int parity = k % 2;
    int sign = *sn.pin_norm_sign;
    GroupComponent expect =
        parity == 0 ? (sign > 0 ? GroupComponent::PlusUp : GroupComponent::PlusDown)
                    : (sign > 0 ? GroupComponent::MinusUp : GroupComponent::MinusDown);
    CHECK(comp == expect);
    if (parity == 0) {
      // The matrix-side detection agrees on the even part. For odd parity
      // the (parity, sign) table presumes the time-first labeling and the
      // two detectors may differ; only properness is convention-free there.
      CHECK(chi(sn).component == expect);
    } else {
      GroupComponent mc = chi(sn).component;
      CHECK((mc == GroupComponent::MinusUp || mc == GroupComponent::MinusDown));
    }
  }
  SpinElement one{Md::scalar(sig, 1.0), 0, {}};
  CHECK(component_of(one) == GroupComponent::PlusUp);
}

TEST_CASE("chi preserves the metric and is a homomorphism, randomized") {
  std::mt19937_64 rng(777);
  for (Signature sig : {Signature(2, 0), Signature(3, 1), Signature(2, 2), Signature(1, 4)}) {
    for (int trial = 0; trial < 25; ++trial) {
      int k = 1 + static_cast<int>(rng() % 6);
      SpinElement s = random_vector_product(sig, k, rng);
      OrthogonalMatrix ls = chi(s);
      auto max_entry = [](const OrthogonalMatrix& m) {
        double v = 1.0;
        for (double e : m.entries) v = std::max(v, std::abs(e));
        return v;
      };
      CHECK(metric_residual(ls) < 1e-10 * max_entry(ls) * max_entry(ls));

      SpinElement t = random_vector_product(sig, 1 + static_cast<int>(rng() % 6), rng);
      OrthogonalMatrix lt = chi(t);
      SpinElement st{s.value * t.value, {}, {}};
      st.factor_parity = (k + ((*t.factor_parity))) % 2;
      OrthogonalMatrix lst = chi(st);
      double scale = max_entry(ls) * max_entry(lt);
      for (int i = 0; i < sig.n(); ++i)
        for (int j = 0; j < sig.n(); ++j) {
          double acc = 0;
          for (int m = 0; m < sig.n(); ++m) acc += ls.at(i, m) * lt.at(m, j);
          CHECK(std::abs(acc - lst.at(i, j)) < 1e-10 * scale);
        }
    }
  }
}

TEST_CASE("chi(s) equals chi(-s) exactly") {
  std::mt19937_64 rng(888);
  Signature sig(3, 1);
  for (int trial = 0; trial < 10; ++trial) {
    SpinElement s = random_vector_product(sig, 2 + 2 * static_cast<int>(rng() % 2), rng);
    SpinElement neg{-s.value, s.factor_parity, {}};
    OrthogonalMatrix a = chi(s), b = chi(neg);
    for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i] == b.entries[i]);
  }
}

TEST_CASE("lie algebra basis: count, exponentials, commutator closure") {
  CHECK(lie_algebra_basis(Signature(3, 1)).size() == 6);
  CHECK(lie_algebra_basis(Signature(2, 0)).size() == 1);
  auto basis30 = lie_algebra_basis(Signature(3, 0));
  CHECK(basis30.size() == 3);
  for (const Md& b : basis30) {
    SpinElement s = exp_bivector(b * 0.37);
    Md norm = bar(s.value) * s.value;
    CHECK(std::abs(norm.scalar_part() - 1.0) < 1e-10);
    for (const auto& [mask, c] : norm.terms())
      if (mask != 0) CHECK(std::abs(c) < 1e-10);
  }
  // Commutators stay in the bivector span (structure constants of rotations).
  for (const Md& a : basis30)
    for (const Md& b : basis30) {
      Md comm = a * b - b * a;
      for (const auto& [mask, c] : comm.terms()) CHECK(blade_grade(mask) == 2);
    }
}

TEST_CASE("exp(xy) lands in Spin-up exactly when x and y are orthogonal") {
  Signature sig(2, 0);
  Md x = vector_element(sig, {1.0, 0.0});
  Md y_orth = vector_element(sig, {0.0, 1.0});
  Md y_skew = vector_element(sig, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});

  Md s_orth = exp_series(x * y_orth);
  Md n_orth = bar(s_orth) * s_orth;
  CHECK(std::abs(n_orth.scalar_part() - 1.0) < 1e-10);

  Md s_skew = exp_series(x * y_skew);
  Md n_skew = bar(s_skew) * s_skew;
  CHECK(std::abs(n_skew.scalar_part() - 1.0) > 1e-3);
}

TEST_CASE("exp_bivector rejects non-bivector input") {
  Signature sig(2, 0);
  CHECK_THROWS_AS(exp_bivector(Md::generator(sig, 0)), std::invalid_argument);
  SpinElement zero = exp_bivector(Md(sig));
  CHECK(zero.value == Md::scalar(sig, 1.0));
}
