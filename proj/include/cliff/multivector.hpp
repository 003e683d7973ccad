#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "cliff/blades.hpp"
#include "cliff/scalars.hpp"
#include "cliff/signature.hpp"

namespace cliff {

/// Sparse element of C(p,q) with coefficients in Coeff. Values are immutable
/// in spirit: every operation returns a fresh element, zero coefficients are
/// pruned on insertion.
template <class Coeff>
class Multivector {
 public:
  using Terms = std::map<BladeMask, Coeff>;

  Multivector() = default;
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(const Signature& sig, Coeff c) {
    Multivector m(sig);
    m.add_term(0, std::move(c));
    return m;
  }

  static Multivector blade(const Signature& sig, BladeMask mask, Coeff c) {
    if (mask >= (BladeMask{1} << sig.n())) throw std::out_of_range("blade mask outside algebra");
    Multivector m(sig);
    m.add_term(mask, std::move(c));
    return m;
  }

  /// gamma^mu.
  static Multivector generator(const Signature& sig, int mu) {
    if (mu < 0 || mu >= sig.n()) throw std::out_of_range("generator index outside signature");
    return blade(sig, BladeMask{1} << mu, Coeff(1));
  }

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Coeff coefficient(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff scalar_part() const { return coefficient(0); }

  /// True when every term has the given grade parity (0 even, 1 odd).
  bool has_pure_parity(int parity) const {
    for (const auto& [mask, c] : terms_)
      if (blade_grade(mask) % 2 != parity) return false;
    return true;
  }

  void add_term(BladeMask mask, Coeff c) {
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      if (!coeff_is_zero(c)) terms_.emplace(mask, std::move(c));
      return;
    }
    it->second += c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  Multivector operator-() const {
    Multivector r(sig_);
    for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
    return r;
  }

  Multivector& operator+=(const Multivector& o) {
    check_signature(o);
    for (const auto& [mask, c] : o.terms_) add_term(mask, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_signature(o);
    for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
    return *this;
  }
  Multivector& operator*=(const Coeff& c) {
    if (coeff_is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [mask, v] : terms_) v *= c;
    prune();
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Coeff& c) { return a *= c; }
  friend Multivector operator*(const Coeff& c, Multivector a) { return a *= c; }

  /// Geometric product: bilinear extension of the signed blade product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_signature(b);
    Multivector r(a.sig_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        int s = blade_product_sign(ma, mb, a.sig_);
        Coeff c = ca * cb;
        if (s < 0) c = -c;
        r.add_term(ma ^ mb, std::move(c));
      }
    }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

 private:
  void check_signature(const Multivector& o) const {
    if (sig_ != o.sig_)
      throw std::invalid_argument("signature mismatch: " + sig_.str() + " vs " + o.sig_.str());
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = coeff_is_zero(it->second) ? terms_.erase(it) : std::next(it);
  }

  Signature sig_;
  Terms terms_;
};

template <class Coeff>
Multivector<Coeff> geometric_product(const Multivector<Coeff>& a, const Multivector<Coeff>& b) {
  return a * b;
}

/// Dirac bar: reverse the factor order of every blade and conjugate the
/// coefficients. An anti-automorphism; bar(bar(a)) == a.
template <class Coeff>
Multivector<Coeff> bar(const Multivector<Coeff>& a) {
  Multivector<Coeff> r(a.signature());
  for (const auto& [mask, c] : a.terms()) {
    Coeff v = conj_coeff(c);
    if (blade_reversal_sign(mask) < 0) v = -v;
    r.add_term(mask, std::move(v));
  }
  return r;
}

template <class Coeff>
Multivector<Coeff> grade_part(const Multivector<Coeff>& a, int grade) {
  Multivector<Coeff> r(a.signature());
  for (const auto& [mask, c] : a.terms())
    if (blade_grade(mask) == grade) r.add_term(mask, c);
  return r;
}

template <class Coeff>
Multivector<Coeff> even_part(const Multivector<Coeff>& a) {
  Multivector<Coeff> r(a.signature());
  for (const auto& [mask, c] : a.terms())
    if (blade_grade(mask) % 2 == 0) r.add_term(mask, c);
  return r;
}

template <class Coeff>
Multivector<Coeff> odd_part(const Multivector<Coeff>& a) {
  Multivector<Coeff> r(a.signature());
  for (const auto& [mask, c] : a.terms())
    if (blade_grade(mask) % 2 == 1) r.add_term(mask, c);
  return r;
}

/// Orientation operator: the ascending product of all n generators,
/// i.e. the grade-n blade with coefficient 1.
template <class Coeff>
Multivector<Coeff> orientation_operator(const Signature& sig) {
  if (sig.n() == 0) throw std::domain_error("no orientation operator in a 0-generator algebra");
  BladeMask all = (BladeMask{1} << sig.n()) - 1;
  return Multivector<Coeff>::blade(sig, all, Coeff(1));
}

/// Square of the orientation operator, +1 or -1, from signature arithmetic.
/// Must (and does, see tests) agree with squaring the blade.
inline int orientation_square_sign(const Signature& sig) {
  BladeMask all = (BladeMask{1} << sig.n()) - 1;
  return blade_square_sign(all, sig);
}

/// Exact-coefficient element, the workhorse of the core algebra.
using Mq = Multivector<GaussianRational>;
/// Float-coefficient element, used by the group-level machinery.
using Md = Multivector<double>;

}  // namespace cliff
