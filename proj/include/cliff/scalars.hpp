#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cliff {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive den).
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// GMP does not canonicalize two-argument constructions on its own; always
/// build ratios through here.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parse "num/den" or "num". Throws on garbage.
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

/// Gaussian rational a + b*i. The coefficient ring of the complexified
/// algebra; the real algebra just keeps im == 0.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int v) : re(v), im(0) {}  // NOLINT: implicit by design
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n2 = o.norm2();
    if (n2 == 0) throw std::domain_error("division by zero Gaussian rational");
    Rational r = (re * o.re + im * o.im) / n2;
    Rational i = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return z.re.get_str();
  return z.re.get_str() + (z.im > 0 ? "+" : "") + z.im.get_str() + "i";
}

// Coefficient-ring hooks used by the Multivector template.
inline GaussianRational conj_coeff(const GaussianRational& z) { return z.conj(); }
inline double conj_coeff(double x) { return x; }
inline std::complex<double> conj_coeff(const std::complex<double>& z) { return std::conj(z); }

inline bool coeff_is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool coeff_is_zero(double x) { return x == 0.0; }
inline bool coeff_is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0); }

}  // namespace cliff
