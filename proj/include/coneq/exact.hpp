#pragma once

// Exact arithmetic in Q(i) for rational-friendly inputs: an independent twin
// of the floating-point form, partner and chart computations. No square
// roots, hence no orthonormalization.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "coneq/pseudoherm.hpp"

namespace coneq::exact {

/// Gaussian rational re + im i; both parts kept in lowest terms.
class QGaussian {
 public:
  QGaussian() = default;
  QGaussian(mpq_class re, mpq_class im = 0);
  QGaussian(long re, long im = 0) : QGaussian(mpq_class(re), mpq_class(im)) {}

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  QGaussian conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  QGaussian& operator+=(const QGaussian& o);
  QGaussian& operator-=(const QGaussian& o);
  QGaussian& operator*=(const QGaussian& o);
  /// Throws Domain on division by zero.
  QGaussian& operator/=(const QGaussian& o);

  friend QGaussian operator+(QGaussian a, const QGaussian& b) { return a += b; }
  friend QGaussian operator-(QGaussian a, const QGaussian& b) { return a -= b; }
  friend QGaussian operator*(QGaussian a, const QGaussian& b) { return a *= b; }
  friend QGaussian operator/(QGaussian a, const QGaussian& b) { return a /= b; }
  friend QGaussian operator-(const QGaussian& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const QGaussian& a, const QGaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// "num/den" (or "num" for integers) in decimal.
std::string to_string(const mpq_class& q);
/// Parses "num/den" or "num"; throws Parse.
mpq_class parse_rational(const std::string& text);

class QVector {
 public:
  QVector(Signature sig, std::vector<QGaussian> components);

  static QVector zero(Signature sig);
  static QVector basis(Signature sig, int j);

  const Signature& signature() const { return sig_; }
  const std::vector<QGaussian>& components() const { return c_; }
  const QGaussian& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  int size() const { return static_cast<int>(c_.size()); }
  bool is_zero() const;
  CVector to_cvector() const;

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(const QGaussian& c);
  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(const QGaussian& c, QVector a) { return a *= c; }
  friend bool operator==(const QVector& a, const QVector& b) { return a.sig_ == b.sig_ && a.c_ == b.c_; }

 private:
  Signature sig_;
  std::vector<QGaussian> c_;
};

/// Exact f(u,v) = sum_j eta_j u^j conj(v^j).
QGaussian exact_form_eval(const QVector& u, const QVector& v);

/// f(x,x) == 0 identically.
bool exact_isotropy(const QVector& x);

/// Rational chart data: isotropic x, partner u with f(u,x) = 1, and an
/// eta-orthonormal rational basis of {x,u}^perp (positive vectors first).
struct QChart {
  QVector x;
  QVector u;
  std::vector<QVector> mu_basis;

  /// Checks every chart identity exactly; throws Unsupported otherwise.
  void validate() const;
  /// x = e_1 + e_n, u = (e_1 - e_n)/2, mu_basis = e_2 .. e_{n-1}.
  static QChart standard(const Signature& sig);
};

/// The same two-step construction as the floating hyperbolic_partner. Without a
/// hint the first standard basis vector with maximal |x_j|^2 is used.
QVector exact_hyperbolic_partner(const QVector& x, const QVector* hint = nullptr);

QVector exact_kappa0(const QChart& chart, const mpq_class& r, const std::vector<QGaussian>& y_coords);

struct QChartPoint {
  mpq_class r;
  std::vector<QGaussian> y_coords;
  /// Coefficient of x in b / f(b,x) = y + u + beta x.
  QGaussian beta;
};

/// Exact chart inverse; returns false (leaving `out` untouched) when f(b,x) = 0.
bool exact_chart_inverse(const QChart& chart, const QVector& b, QChartPoint& out);

/// kappa0 then its inverse; true iff (r, y) is recovered exactly and
/// f(k,k) = 0, f(x,k) = 1 hold as identities.
bool exact_kappa_roundtrip(const QChart& chart, const mpq_class& r, const std::vector<QGaussian>& y_coords);

}  // namespace coneq::exact
