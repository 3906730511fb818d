#include "coneq/exact.hpp"

namespace coneq::exact {

QGaussian::QGaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

QGaussian& QGaussian::operator+=(const QGaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QGaussian& QGaussian::operator-=(const QGaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QGaussian& QGaussian::operator*=(const QGaussian& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

QGaussian& QGaussian::operator/=(const QGaussian& o) {
  const mpq_class d = o.norm2();
  if (d == 0) throw ConeError(ErrorKind::Domain, "division by zero in Q(i)");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string to_string(const mpq_class& q) { return q.get_str(10); }

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw ConeError(ErrorKind::Parse, "not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw ConeError(ErrorKind::Parse, "zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

QVector::QVector(Signature sig, std::vector<QGaussian> components) : sig_(sig), c_(std::move(components)) {
  if (static_cast<int>(c_.size()) != sig_.n()) {
    throw ConeError(ErrorKind::SignatureMismatch, "rational vector has wrong length");
  }
}

QVector QVector::zero(Signature sig) { return {sig, std::vector<QGaussian>(static_cast<std::size_t>(sig.n()))}; }

QVector QVector::basis(Signature sig, int j) {
  QVector v = zero(sig);
  v.c_[static_cast<std::size_t>(j)] = QGaussian(1);
  return v;
}

bool QVector::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

CVector QVector::to_cvector() const {
  Eigen::VectorXcd v(sig_.n());
  for (int j = 0; j < sig_.n(); ++j) v[j] = c_[static_cast<std::size_t>(j)].to_complex();
  return {sig_, std::move(v)};
}

QVector& QVector::operator+=(const QVector& o) {
  if (!(sig_ == o.sig_)) throw ConeError(ErrorKind::SignatureMismatch, "rational vector sum");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  if (!(sig_ == o.sig_)) throw ConeError(ErrorKind::SignatureMismatch, "rational vector difference");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

QVector& QVector::operator*=(const QGaussian& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

QGaussian exact_form_eval(const QVector& u, const QVector& v) {
  if (!(u.signature() == v.signature())) throw ConeError(ErrorKind::SignatureMismatch, "exact form");
  QGaussian sum;
  const Signature& sig = u.signature();
  for (int j = 0; j < sig.n(); ++j) {
    const QGaussian term = u[j] * v[j].conj();
    if (j < sig.p()) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

bool exact_isotropy(const QVector& x) { return exact_form_eval(x, x).is_zero(); }

void QChart::validate() const {
  const Signature& sig = x.signature();
  const auto fail = [](const char* what) { throw ConeError(ErrorKind::Unsupported, what); };
  if (!(u.signature() == sig)) fail("chart partner has a different signature");
  if (x.is_zero() || !exact_isotropy(x)) fail("chart center is not a cone point");
  if (!exact_isotropy(u)) fail("chart partner is not isotropic");
  if (!(exact_form_eval(u, x) == QGaussian(1))) fail("f(u,x) != 1");
  if (static_cast<int>(mu_basis.size()) != sig.n() - 2) fail("M_u basis needs n-2 vectors");
  for (std::size_t k = 0; k < mu_basis.size(); ++k) {
    if (!exact_form_eval(mu_basis[k], x).is_zero() || !exact_form_eval(mu_basis[k], u).is_zero()) {
      fail("M_u vector not orthogonal to x and u");
    }
    for (std::size_t l = 0; l < mu_basis.size(); ++l) {
      long expected = 0;
      if (k == l) expected = static_cast<int>(k) < sig.p() - 1 ? 1 : -1;
      if (!(exact_form_eval(mu_basis[k], mu_basis[l]) == QGaussian(expected))) {
        fail("M_u basis is not orthonormal");
      }
    }
  }
}

QChart QChart::standard(const Signature& sig) {
  const int n = sig.n();
  QVector x = QVector::basis(sig, 0) + QVector::basis(sig, n - 1);
  QVector u = QGaussian(mpq_class(1, 2)) * (QVector::basis(sig, 0) - QVector::basis(sig, n - 1));
  std::vector<QVector> mu;
  for (int j = 1; j + 1 < n; ++j) mu.push_back(QVector::basis(sig, j));
  return {std::move(x), std::move(u), std::move(mu)};
}

QVector exact_hyperbolic_partner(const QVector& x, const QVector* hint) {
  QVector v = QVector::zero(x.signature());
  if (hint != nullptr) {
    v = *hint;
  } else {
    int best = -1;
    mpq_class best_modulus = 0;
    for (int j = 0; j < x.size(); ++j) {
      if (x[j].norm2() > best_modulus) {
        best_modulus = x[j].norm2();
        best = j;
      }
    }
    if (best < 0) throw ConeError(ErrorKind::InternalContract, "zero vector has no partner");
    v = QVector::basis(x.signature(), best);
  }
  const QGaussian pairing = exact_form_eval(v, x);
  if (pairing.is_zero()) throw ConeError(ErrorKind::Domain, "partner hint is orthogonal to x");
  const QVector scaled = (QGaussian(1) / pairing) * v;
  const QGaussian half_norm = QGaussian(mpq_class(1, 2)) * exact_form_eval(scaled, scaled);
  return scaled - half_norm * x;
}

namespace {

QVector mu_vector(const QChart& chart, const std::vector<QGaussian>& coords) {
  if (coords.size() != chart.mu_basis.size()) {
    throw ConeError(ErrorKind::SignatureMismatch, "M_u coordinates need n-2 entries");
  }
  QVector y = QVector::zero(chart.x.signature());
  for (std::size_t k = 0; k < coords.size(); ++k) y += coords[k] * chart.mu_basis[k];
  return y;
}

}  // namespace

QVector exact_kappa0(const QChart& chart, const mpq_class& r, const std::vector<QGaussian>& y_coords) {
  const QVector y = mu_vector(chart, y_coords);
  const QGaussian coefficient(-exact_form_eval(y, y).re() / 2, r);
  return y + chart.u + coefficient * chart.x;
}

bool exact_chart_inverse(const QChart& chart, const QVector& b, QChartPoint& out) {
  const QGaussian pairing = exact_form_eval(b, chart.x);
  if (pairing.is_zero()) return false;
  const QVector z = (QGaussian(1) / pairing) * b;
  const QGaussian beta = exact_form_eval(z, chart.u);
  std::vector<QGaussian> y;
  const int plus = chart.x.signature().p() - 1;
  for (std::size_t k = 0; k < chart.mu_basis.size(); ++k) {
    QGaussian c = exact_form_eval(z, chart.mu_basis[k]);
    y.push_back(static_cast<int>(k) < plus ? c : -c);
  }
  out = {beta.im(), std::move(y), beta};
  return true;
}

bool exact_kappa_roundtrip(const QChart& chart, const mpq_class& r, const std::vector<QGaussian>& y_coords) {
  chart.validate();
  const QVector k = exact_kappa0(chart, r, y_coords);
  if (!exact_isotropy(k)) return false;
  if (!(exact_form_eval(chart.x, k) == QGaussian(1))) return false;
  QChartPoint back;
  if (!exact_chart_inverse(chart, k, back)) return false;
  // Isotropy forces Re(beta) = -(y,y)/2.
  const QVector y = mu_vector(chart, back.y_coords);
  if (!(back.beta.re() == -exact_form_eval(y, y).re() / 2)) return false;
  return back.r == r && back.y_coords == y_coords;
}

}  // namespace coneq::exact
