#include "coneq/quotients.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace coneq {

Split::Split(Signature sig, std::vector<CVector> basis, std::string id, double tol)
    : sig_(sig), basis_(std::move(basis)), id_(std::move(id)) {
  if (static_cast<int>(basis_.size()) != sig_.n()) {
    throw ConeError(ErrorKind::SignatureMismatch, "split needs n basis vectors");
  }
  const Eigen::MatrixXcd residual = gram_matrix(basis_) - sig_.eta_matrix();
  if (residual.cwiseAbs().maxCoeff() > tol) {
    throw ConeError(ErrorKind::NotIsometry, "split basis is not eta-orthonormal");
  }
}

Split Split::standard(const Signature& sig) {
  std::vector<CVector> basis;
  for (int j = 0; j < sig.n(); ++j) basis.push_back(CVector::basis(sig, j));
  return {sig, std::move(basis), "standard"};
}

Split Split::transported(const GroupElement& g, std::string id) {
  std::vector<CVector> basis;
  for (int j = 0; j < g.signature().n(); ++j) basis.push_back(g.column(j));
  return {g.signature(), std::move(basis), std::move(id)};
}

Eigen::VectorXcd Split::coordinates(const CVector& x) const {
  Eigen::VectorXcd c(sig_.n());
  for (int j = 0; j < sig_.n(); ++j) c[j] = sig_.eta(j) * form_eval(x, basis_[j]);
  return c;
}

CVector Split::from_coordinates(const Eigen::VectorXcd& c) const {
  CVector out = CVector::zero(sig_);
  for (int j = 0; j < sig_.n(); ++j) out += c[j] * basis_[j];
  return out;
}

namespace {

struct SplitCoords {
  Eigen::VectorXcd plus;
  Eigen::VectorXcd minus;
};

SplitCoords split_coordinates(const CVector& x, const Split& s) {
  const Eigen::VectorXcd c = s.coordinates(x);
  const Signature& sig = s.signature();
  return {c.head(sig.p()), c.tail(sig.q())};
}

double split_radius(const SplitCoords& c, const CVector& x) {
  // On the cone |c+|^2 = |c-|^2; averaging keeps the result symmetric in the two parts.
  const double r2 = 0.5 * (c.plus.squaredNorm() + c.minus.squaredNorm());
  const double r = std::sqrt(r2);
  if (!(r > 0.0) || !std::isfinite(r) || r2 <= 1e-24 * x.euclidean_norm2()) {
    throw ConeError(ErrorKind::DegenerateInput, "split radius vanishes");
  }
  return r;
}

// Deviation from 1 below which a radius counts as already normalized.
constexpr double kUnitSnap = 64 * std::numeric_limits<double>::epsilon();

}  // namespace

SplitParts split_decompose(const ConePoint& x, const Split& s) {
  if (!(x.signature() == s.signature())) throw ConeError(ErrorKind::SignatureMismatch, "split");
  const SplitCoords c = split_coordinates(x.vector(), s);
  const double r = split_radius(c, x.vector());
  const Signature& sig = s.signature();
  Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(sig.n());
  Eigen::VectorXcd minus = Eigen::VectorXcd::Zero(sig.n());
  plus.head(sig.p()) = c.plus;
  minus.tail(sig.q()) = c.minus;
  return {s.from_coordinates(plus), s.from_coordinates(minus), r};
}

RayRep::RayRep(ConePoint vector, Split split) : x_(std::move(vector)), split_(std::move(split)) {}

Eigen::VectorXcd RayRep::plus_sphere() const { return split_coordinates(x_.vector(), split_).plus; }
Eigen::VectorXcd RayRep::minus_sphere() const { return split_coordinates(x_.vector(), split_).minus; }
double RayRep::plus_norm() const { return plus_sphere().norm(); }
double RayRep::minus_norm() const { return minus_sphere().norm(); }

PhaseGauge pivot_phase_gauge(const Eigen::VectorXcd& coords, double tie_tol) {
  const double max_modulus = coords.cwiseAbs().maxCoeff();
  if (!(max_modulus > 0.0)) throw ConeError(ErrorKind::DegenerateInput, "phase gauge of zero vector");
  for (Eigen::Index j = 0; j < coords.size(); ++j) {
    const double m = std::abs(coords[j]);
    if (m >= max_modulus * (1.0 - tie_tol)) return {static_cast<int>(j), std::conj(coords[j]) / m};
  }
  throw ConeError(ErrorKind::InternalContract, "no pivot found");
}

RayRep canonicalize_ray(const ConePoint& x, const Split& s) {
  if (!(x.signature() == s.signature())) throw ConeError(ErrorKind::SignatureMismatch, "split");
  const double r = split_radius(split_coordinates(x.vector(), s), x.vector());
  if (std::abs(r - 1.0) <= kUnitSnap) return {x, s};
  return {ConePoint::certify(x.vector() / Complex(r)), s};
}

RayRep canonicalize_ray(const ConePoint& x) { return canonicalize_ray(x, Split::standard(x.signature())); }

ProjRep canonicalize_phase(const ConePoint& x, const Split& s) {
  RayRep ray = canonicalize_ray(x, s);
  const Eigen::VectorXcd& v = ray.vector().vector().coeffs();
  const PhaseGauge gauge = pivot_phase_gauge(v);
  const Complex pivot = v[gauge.pivot_index];
  if (pivot.imag() == 0.0 && pivot.real() > 0.0) return {std::move(ray), gauge.pivot_index};

  Eigen::VectorXcd rotated = v * gauge.phase;
  rotated[gauge.pivot_index] = std::abs(pivot);
  ConePoint y = ConePoint::certify(CVector(x.signature(), std::move(rotated)));
  // The rotation preserves Q_s up to rounding; snap the radius back onto it.
  return {canonicalize_ray(y, s), gauge.pivot_index};
}

ProjRep canonicalize_phase(const ConePoint& x) {
  return canonicalize_phase(x, Split::standard(x.signature()));
}

bool proj_equivalent(const ConePoint& x, const ConePoint& y, double tol) {
  if (!(x.signature() == y.signature())) throw ConeError(ErrorKind::SignatureMismatch, "proj_equivalent");
  const ProjRep a = canonicalize_phase(x);
  const ProjRep b = canonicalize_phase(y);
  return (a.vector().vector().coeffs() - b.vector().vector().coeffs()).cwiseAbs().maxCoeff() <= tol;
}

TorusAngles torus_coords(const ConePoint& x) {
  if (!(x.signature() == Signature(1, 1))) {
    throw ConeError(ErrorKind::UnsupportedSignature, "torus coordinates need signature (1,1)");
  }
  const RayRep ray = canonicalize_ray(x);
  const auto angle = [](Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    if (a >= 2.0 * std::numbers::pi) a = 0.0;
    return a;
  };
  const Eigen::VectorXcd& v = ray.vector().vector().coeffs();
  return {angle(v[0]), angle(v[1])};
}

}  // namespace coneq
