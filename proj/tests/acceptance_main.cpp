// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cliff/classify.hpp"
#include "cliff/gamma.hpp"
#include "cliff/sm.hpp"
#include "cliff/spin_geometry.hpp"
#include "cliff/spin_group.hpp"
#include "cliff/structural.hpp"

using namespace cliff;
using Cd = std::complex<double>;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("missing data file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// --- 1. table reproduction ---------------------------------------------------

bool table_reproduction(std::string& detail) {
  auto rows_e = classification_table(TableFamily::Euclidean, 4, 11);
  auto rows_h = classification_table(TableFamily::Hyperbolic, 4, 11);
  bool ok_e = table_to_csv(TableFamily::Euclidean, rows_e) ==
              read_file(std::string(TEST_DATA_DIR) + "/euclidean_table.csv");
  bool ok_h = table_to_csv(TableFamily::Hyperbolic, rows_h) ==
              read_file(std::string(TEST_DATA_DIR) + "/hyperbolic_table.csv");
  detail = std::string("euclidean ") + (ok_e ? "ok" : "MISMATCH") + ", hyperbolic " +
           (ok_h ? "ok" : "MISMATCH");
  return ok_e && ok_h;
}

// --- 2. oracle equivalence ---------------------------------------------------

bool oracle_equivalence(std::string& detail) {
  int checked = 0, disagreements = 0;
  for (int p = 0; p <= 8; ++p)
    for (int q = 0; p + q <= 8; ++q) {
      ++checked;
      if (classify_structural(Signature(p, q)) != classify_real(p, q).first) ++disagreements;
    }
  const std::vector<Signature> sampled{Signature(9, 0), Signature(5, 4), Signature(0, 9),
                                       Signature(10, 0), Signature(5, 5), Signature(3, 7)};
  for (const Signature& sig : sampled) {
    ++checked;
    if (classify_structural(sig) != classify_real(sig.p, sig.q).first) ++disagreements;
  }
  detail = std::to_string(checked) + " signatures, " + std::to_string(disagreements) +
           " disagreements";
  return disagreements == 0;
}

// --- 3. periodicity identities ----------------------------------------------

bool periodicity_identities(std::string& detail) {
  int failures = 0;
  for (int p = 0; p <= 20; ++p)
    for (int q = 0; p + q <= 20; ++q) {
      MatrixAlgebraType t = classify_real(p, q).first;
      MatrixAlgebraType shifted = classify_real(p + 8, q).first;
      if (shifted.ring != t.ring || shifted.doubled != t.doubled || shifted.d != 16 * t.d) ++failures;
      if (t.real_dimension() != (std::int64_t{1} << (p + q))) ++failures;
      if (p >= 1 && q >= 1) {
        MatrixAlgebraType even = classify_even(p, q);
        if (even != classify_real(p, q - 1).first || even != classify_real(q, p - 1).first) ++failures;
      }
    }
  for (int n = 1; n <= 20; ++n)
    if (classify_real(n, 0).first != classify_real(1, n - 1).first) ++failures;
  bool asymmetric = false;
  for (int n = 4; n <= 11; ++n)
    if (classify_real(0, n).first != classify_real(n - 1, 1).first) asymmetric = true;
  if (!asymmetric) ++failures;
  detail = std::to_string(failures) + " identity failures";
  return failures == 0;
}

// --- 4. representation relations ----------------------------------------------

bool representation_relations(std::string& detail) {
  int failures = 0;
  auto gq1 = [](int re, int im = 0) { return GaussianRational{Rational(re), Rational(im)}; };
  for (int p = 0; p <= 10; ++p) {
    for (int q = 0; p + q <= 10; ++q) {
      Signature sig(p, q);
      GammaRepresentation rep = build_representation(sig);
      if (rep.f != (1 << (sig.n() / 2))) ++failures;
      // Anticommutation, exact.
      for (int mu = 0; mu < sig.n(); ++mu)
        for (int nu = mu; nu < sig.n(); ++nu) {
          CMatrix anti = rep.gammas[mu] * rep.gammas[nu] + rep.gammas[nu] * rep.gammas[mu];
          CMatrix expect(rep.f, rep.f);
          if (mu == nu)
            for (int i = 0; i < rep.f; ++i) expect.at(i, i) = gq1(2 * sig.metric_sign(mu));
          if (anti != expect) ++failures;
        }
      // Chirality for n even.
      if (sig.n() % 2 == 0 && sig.n() > 0) {
        CMatrix theta = chirality(rep);
        if (theta * theta != CMatrix::identity(rep.f)) ++failures;
        for (const CMatrix& g : rep.gammas)
          if (theta * g != -(g * theta)) ++failures;
      }
      // Conjugation sign table against the existence predicates.
      SpinorTypeReport types = spinor_types(p, q);
      auto channels = conjugation_channels(rep);
      bool has_plus = false, has_plus_commuting = false;
      for (const auto& ch : channels) {
        if (ch.c_squared == +1) has_plus = true;
        if (ch.c_squared == +1 && ch.theta_commute == +1) has_plus_commuting = true;
        if (sig.n() % 2 == 0 && ch.theta_commute != (types.chirality_uses_i ? -1 : +1)) ++failures;
      }
      if (has_plus != types.majorana_exists) ++failures;
      if (sig.n() % 2 == 0 && has_plus_commuting != types.weyl_majorana_exists) ++failures;
    }
  }
  // The named cases.
  auto majorana_at = [](int p, int q) {
    return build_conjugation(build_representation(Signature(p, q))).has_value();
  };
  if (!majorana_at(3, 1) || !majorana_at(1, 1) || !majorana_at(8, 0)) ++failures;
  if (majorana_at(4, 0)) ++failures;
  if (!spinor_types(8, 0).weyl_majorana_exists || !spinor_types(1, 1).weyl_majorana_exists) ++failures;
  if (spinor_types(3, 1).weyl_majorana_exists || spinor_types(4, 0).weyl_majorana_exists) ++failures;
  detail = std::to_string(failures) + " relation failures over 66 signatures";
  return failures == 0;
}

// --- 5. spin-group properties --------------------------------------------------

Md random_bounded_bivector(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  Md b(sig);
  for (int mu = 0; mu < sig.n(); ++mu)
    for (int nu = mu + 1; nu < sig.n(); ++nu)
      b.add_term((BladeMask{1} << mu) | (BladeMask{1} << nu), u(rng));
  return b;
}

Md random_unit_vector(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::vector<double> v(static_cast<std::size_t>(sig.n()));
    double norm = 0;
    for (int mu = 0; mu < sig.n(); ++mu) {
      v[static_cast<std::size_t>(mu)] = u(rng);
      norm += sig.metric_sign(mu) * v[static_cast<std::size_t>(mu)] * v[static_cast<std::size_t>(mu)];
    }
    if (std::abs(norm) < 0.5) continue;
    double s = 1.0 / std::sqrt(std::abs(norm));
    for (auto& x : v) x *= s;
    return vector_element(sig, v);
  }
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

bool spin_group_properties(std::string& detail) {
  int failures = 0;
  std::mt19937_64 rng(20260808u);
  const std::vector<Signature> sigs{Signature(2, 0), Signature(1, 1), Signature(3, 0),
                                    Signature(2, 1), Signature(3, 1), Signature(2, 2),
                                    Signature(4, 1), Signature(0, 5), Signature(3, 3),
                                    Signature(6, 0)};
  int evaluations = 0;
  double worst_metric = 0, worst_hom = 0;
  for (const Signature& sig : sigs) {
    for (int trial = 0; trial < 25; ++trial) {
      // One rotor and one vector product per trial: 500 chi evaluations total.
      SpinElement s = exp_bivector(random_bounded_bivector(sig, rng));
      SpinElement t{Md::scalar(sig, 1.0), 0, {}};
      int k = 2 * (1 + static_cast<int>(rng() % 3));
      for (int i = 0; i < k; ++i) t.value = t.value * random_unit_vector(sig, rng);
      t.factor_parity = 0;

      OrthogonalMatrix ls = chi(s), lt = chi(t);
      evaluations += 2;
      worst_metric = std::max({worst_metric, metric_residual(ls), metric_residual(lt)});
      if (metric_residual(ls) > 1e-10 || metric_residual(lt) > 1e-10) ++failures;

      SpinElement st{s.value * t.value, 0, {}};
      OrthogonalMatrix lst = chi(st);
      for (int i = 0; i < sig.n(); ++i)
        for (int j = 0; j < sig.n(); ++j) {
          double acc = 0;
          for (int m = 0; m < sig.n(); ++m) acc += ls.at(i, m) * lt.at(m, j);
          worst_hom = std::max(worst_hom, std::abs(acc - lst.at(i, j)));
          if (std::abs(acc - lst.at(i, j)) > 1e-10) ++failures;
        }

      SpinElement neg{-s.value, 0, {}};
      OrthogonalMatrix lneg = chi(neg);
      for (std::size_t i = 0; i < ls.entries.size(); ++i)
        if (ls.entries[i] != lneg.entries[i]) ++failures;  // exact equality
    }
  }

  // Boost columns at beta in {0.1, 1, 3}.
  Signature m31(3, 1);
  for (double beta : {0.1, 1.0, 3.0}) {
    Md b = Md::generator(m31, 3) * Md::generator(m31, 0) * (beta / 2.0);
    OrthogonalMatrix lambda = chi(exp_bivector(b));
    double tol = 1e-12 * std::cosh(beta);
    if (std::abs(lambda.at(3, 3) - std::cosh(beta)) > tol) ++failures;
    if (std::abs(lambda.at(0, 0) - std::cosh(beta)) > tol) ++failures;
    if (std::abs(lambda.at(0, 3) - std::sinh(beta)) > tol) ++failures;
    if (std::abs(lambda.at(3, 0) - std::sinh(beta)) > tol) ++failures;
  }

  // Double cover: a 2 pi rotation is -1 upstairs and the identity downstairs.
  Signature e3(3, 0);
  SpinElement full = exp_bivector(Md::blade(e3, 0b110, M_PI));
  if (std::abs(full.value.scalar_part() + 1.0) > 1e-12) ++failures;
  for (const auto& [mask, c] : full.value.terms())
    if (mask != 0 && std::abs(c) > 1e-12) ++failures;
  OrthogonalMatrix ident = chi(full);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(ident.at(i, j) - (i == j ? 1.0 : 0.0)) > 1e-12) ++failures;

  std::ostringstream os;
  os << evaluations << " chi evaluations, worst metric residual " << worst_metric
     << ", worst homomorphism residual " << worst_hom << ", " << failures << " failures";
  detail = os.str();
  return failures == 0;
}

// --- 6. spin-geometry checks ---------------------------------------------------

bool lift_homomorphism(std::string& detail, int& failures) {
  std::mt19937_64 rng(97531);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0;
  for (Signature sig : {Signature(3, 1), Signature(4, 0)}) {
    GammaRepresentation rep = build_representation(sig);
    const int n = sig.n(), f = rep.f;
    for (int trial = 0; trial < 100; ++trial) {
      auto random_lie = [&]() {
        std::vector<double> lowered(static_cast<std::size_t>(n) * n, 0.0);
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            double v = u(rng);
            lowered[static_cast<std::size_t>(a) * n + b] = v;
            lowered[static_cast<std::size_t>(b) * n + a] = -v;
          }
        std::vector<double> m(lowered);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) m[static_cast<std::size_t>(a) * n + b] *= sig.metric_sign(a);
        return m;
      };
      auto m1 = random_lie(), m2 = random_lie();
      auto l1 = lift_to_spin(m1, rep), l2 = lift_to_spin(m2, rep);
      std::vector<Cd> comm(static_cast<std::size_t>(f) * f, Cd(0.0));
      for (int i = 0; i < f; ++i)
        for (int k = 0; k < f; ++k)
          for (int j = 0; j < f; ++j)
            comm[static_cast<std::size_t>(i) * f + j] +=
                l1[static_cast<std::size_t>(i) * f + k] * l2[static_cast<std::size_t>(k) * f + j] -
                l2[static_cast<std::size_t>(i) * f + k] * l1[static_cast<std::size_t>(k) * f + j];
      std::vector<double> bracket(static_cast<std::size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          for (int j = 0; j < n; ++j)
            bracket[static_cast<std::size_t>(i) * n + j] +=
                m1[static_cast<std::size_t>(i) * n + k] * m2[static_cast<std::size_t>(k) * n + j] -
                m2[static_cast<std::size_t>(i) * n + k] * m1[static_cast<std::size_t>(k) * n + j];
      auto lb = lift_to_spin(bracket, rep);
      for (std::size_t i = 0; i < lb.size(); ++i) worst = std::max(worst, std::abs(comm[i] - lb[i]));
    }
  }
  if (worst > 1e-10) ++failures;
  std::ostringstream os;
  os << "lift residual " << worst;
  detail += os.str();
  return failures == 0;
}

bool flat_dirac_symbol(std::string& detail, int& failures) {
  Signature sig(3, 1);
  GammaRepresentation rep = build_representation(sig);
  const int f = rep.f;
  const int size = 16;
  const double h = 0.5;
  Grid grid{{size, size, size, size}, {h, h, h, h}};
  FrameField frame = FrameField::flat(grid, sig);
  ConnectionField conn = ConnectionField::zero(grid, sig);

  // The flat operator is translation invariant, so its squared impulse
  // response determines its action on every plane wave at once.
  std::vector<std::vector<Cd>> kernels(static_cast<std::size_t>(f));
  for (int c = 0; c < f; ++c) {
    SpinorField impulse = SpinorField::zero(grid, sig, f);
    impulse.at(0, c) = Cd(1.0);
    SpinorField dd = dirac_operator(dirac_operator(impulse, conn, frame, rep), conn, frame, rep);
    kernels[static_cast<std::size_t>(c)] = dd.values;
  }
  // Gather the stencil support once.
  std::vector<std::size_t> support;
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    bool nonzero = false;
    for (int c = 0; c < f && !nonzero; ++c)
      for (int i = 0; i < f && !nonzero; ++i)
        if (kernels[static_cast<std::size_t>(c)][s * f + i] != Cd(0.0)) nonzero = true;
    if (nonzero) support.push_back(s);
  }

  double worst_offdiag = 0, worst_bound_margin = 0;
  int modes_checked = 0;
  std::vector<int> mode(4);
  for (mode[0] = 0; mode[0] < size; ++mode[0])
    for (mode[1] = 0; mode[1] < size; ++mode[1])
      for (mode[2] = 0; mode[2] < size; ++mode[2])
        for (mode[3] = 0; mode[3] < size; ++mode[3]) {
          // Symbol S(k) = sum over the stencil of K(x) exp(-i k.x).
          std::vector<Cd> symbol(static_cast<std::size_t>(f) * f, Cd(0.0));
          for (std::size_t s : support) {
            auto coords = grid.coords(s);
            double phase = 0;
            for (int d = 0; d < 4; ++d)
              phase -= 2.0 * M_PI * mode[static_cast<std::size_t>(d)] *
                       coords[static_cast<std::size_t>(d)] / size;
            Cd w = std::polar(1.0, phase);
            for (int c = 0; c < f; ++c)
              for (int i = 0; i < f; ++i)
                symbol[static_cast<std::size_t>(i) * f + c] +=
                    w * kernels[static_cast<std::size_t>(c)][s * f + i];
          }
          // Representative momentum in (-pi/h, pi/h].
          double lambda_disc = 0, lambda_cont = 0, k2 = 0, kh2 = 0;
          for (int d = 0; d < 4; ++d) {
            int m = mode[static_cast<std::size_t>(d)];
            if (m > size / 2) m -= size;
            double k = 2.0 * M_PI * m / (size * h);
            double sd = std::sin(k * h) / h;
            lambda_disc -= sig.metric_sign(d) * sd * sd;
            lambda_cont -= sig.metric_sign(d) * k * k;
            k2 += k * k;
            kh2 += k * h * (k * h);
          }
          // The squared operator acts as the discrete symbol times identity.
          for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) {
              Cd expect = i == j ? Cd(lambda_disc) : Cd(0.0);
              double err = std::abs(symbol[static_cast<std::size_t>(i) * f + j] - expect);
              worst_offdiag = std::max(worst_offdiag, err);
              if (err > 1e-9 * std::max(1.0, std::abs(lambda_disc))) ++failures;
            }
          // And the discrete symbol tracks the continuum one to second order.
          double bound = 2.0 * (kh2 / 6.0) * k2 + 1e-9;
          double err = std::abs(lambda_disc - lambda_cont);
          worst_bound_margin = std::max(worst_bound_margin, bound > 0 ? err / bound : 0.0);
          if (err > bound) ++failures;
          ++modes_checked;
        }
  std::ostringstream os;
  os << "; " << modes_checked << " plane waves, worst symbol deviation " << worst_offdiag
     << ", worst error/bound " << worst_bound_margin;
  detail += os.str();
  return failures == 0;
}

bool spin_geometry_checks(std::string& detail) {
  int failures = 0;
  lift_homomorphism(detail, failures);
  flat_dirac_symbol(detail, failures);
  detail += ", " + std::to_string(failures) + " failures";
  return failures == 0;
}

// --- 7. standard-model audit ----------------------------------------------------

bool standard_model_audit(std::string& detail) {
  int failures = 0;
  auto report = hypercharge_audit(standard_model_registry());
  if (!report.all_equal || report.lines.size() != 6) ++failures;

  Signature sig(3, 1);
  GammaRepresentation rep = build_representation(sig);

  // Neutrality of the pairing form, exact: hermitian, squares to one,
  // traceless, hence eigenvalues +1,+1,-1,-1.
  CMatrix a = dirac_pairing_matrix(rep);
  if (a.dagger() != a || a * a != CMatrix::identity(rep.f) || a.trace() != GaussianRational(0))
    ++failures;

  std::mt19937_64 rng(1618033u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_bilinear = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SpinorVector psi{sig, {}};
    psi.components.resize(static_cast<std::size_t>(rep.f));
    for (auto& c : psi.components) c = {u(rng), u(rng)};
    std::vector<double> one_form{u(rng), u(rng), u(rng), u(rng)};
    Cd phi{u(rng), u(rng)};
    auto [vec, scal] = bilinear_decomposition_check(rep, psi, phi, one_form);
    worst_bilinear = std::max({worst_bilinear, vec.residual, scal.residual});
    if (vec.residual > 1e-12 || scal.residual > 1e-12) ++failures;
  }

  // Spin invariance of the pairing.
  auto basis = lie_algebra_basis(sig);
  double worst_inv = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Md b(sig);
    for (const Md& e : basis) b += e * (0.6 * u(rng));
    auto smat = representation_matrix_d(rep, exp_bivector(b).value);
    SpinorVector psi{sig, std::vector<Cd>(4)}, phi{sig, std::vector<Cd>(4)};
    for (auto& c : psi.components) c = {u(rng), u(rng)};
    for (auto& c : phi.components) c = {u(rng), u(rng)};
    SpinorVector spsi{sig, std::vector<Cd>(4, Cd(0.0))}, sphi = spsi;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        spsi.components[static_cast<std::size_t>(i)] +=
            smat[static_cast<std::size_t>(i) * 4 + j] * psi.components[static_cast<std::size_t>(j)];
        sphi.components[static_cast<std::size_t>(i)] +=
            smat[static_cast<std::size_t>(i) * 4 + j] * phi.components[static_cast<std::size_t>(j)];
      }
    double err = std::abs(dirac_pairing(spsi, sphi, rep) - dirac_pairing(psi, phi, rep));
    worst_inv = std::max(worst_inv, err);
    if (err > 1e-10) ++failures;
  }

  std::ostringstream os;
  os << "hypercharge sums exact, worst bilinear residual " << worst_bilinear
     << ", worst invariance residual " << worst_inv << ", " << failures << " failures";
  detail = os.str();
  return failures == 0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"table reproduction", table_reproduction},
      {"oracle equivalence", oracle_equivalence},
      {"periodicity identities", periodicity_identities},
      {"representation relations", representation_relations},
      {"spin-group properties", spin_group_properties},
      {"spin-geometry checks", spin_geometry_checks},
      {"standard-model audit", standard_model_audit},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << criteria[i].name
         << " — " << detail << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
