#include "coneq/witt.hpp"

#include <cmath>
#include <string>

namespace coneq {

ChartFrame::ChartFrame(ConePoint x, CVector u, std::vector<CVector> mu_basis, double tol)
    : x_(std::move(x)), u_(std::move(u)), mu_(std::move(mu_basis)) {
  const Signature& sig = x_.signature();
  const auto fail = [](const std::string& what) {
    throw ConeError(ErrorKind::InternalContract, "chart frame: " + what);
  };
  if (!(u_.signature() == sig)) throw ConeError(ErrorKind::SignatureMismatch, "chart partner");
  if (static_cast<int>(mu_.size()) != sig.n() - 2) fail("M_u basis needs n-2 vectors");
  if (std::abs(form_eval(u_, u_)) > tol * u_.euclidean_norm2()) fail("partner is not isotropic");
  if (std::abs(form_eval(u_, x_.vector()) - 1.0) > tol) fail("f(u,x) != 1");

  const Inertia inertia = mu_inertia();
  const double xn = x_.vector().euclidean_norm();
  const double un = u_.euclidean_norm();
  for (std::size_t k = 0; k < mu_.size(); ++k) {
    const CVector& m = mu_[k];
    if (!(m.signature() == sig)) throw ConeError(ErrorKind::SignatureMismatch, "chart M_u basis");
    const double mn = m.euclidean_norm();
    if (std::abs(form_eval(m, x_.vector())) > tol * mn * xn) fail("M_u vector not orthogonal to x");
    if (std::abs(form_eval(m, u_)) > tol * mn * un) fail("M_u vector not orthogonal to u");
    for (std::size_t l = 0; l < mu_.size(); ++l) {
      const double expected = k != l ? 0.0 : (static_cast<int>(k) < inertia.plus ? 1.0 : -1.0);
      if (std::abs(form_eval(m, mu_[l]) - expected) > tol) fail("M_u basis is not orthonormal");
    }
  }
}

Inertia ChartFrame::mu_inertia() const { return {signature().p() - 1, signature().q() - 1}; }

std::vector<CVector> ChartFrame::witt_basis() const {
  const CVector half = 0.5 * x_.vector();
  std::vector<CVector> basis;
  basis.reserve(mu_.size() + 2);
  basis.push_back(half + u_);
  basis.insert(basis.end(), mu_.begin(), mu_.end());
  basis.push_back(half - u_);
  return basis;
}

CVector ChartFrame::mu_vector(const Eigen::VectorXcd& coords) const {
  if (coords.size() != static_cast<Eigen::Index>(mu_.size())) {
    throw ConeError(ErrorKind::SignatureMismatch, "M_u coordinates need n-2 entries");
  }
  CVector y = CVector::zero(signature());
  for (std::size_t k = 0; k < mu_.size(); ++k) y += coords[static_cast<Eigen::Index>(k)] * mu_[k];
  return y;
}

CVector hyperbolic_partner(const ConePoint& x, const std::optional<CVector>& hint) {
  const CVector& xv = x.vector();
  const Signature& sig = x.signature();
  CVector v = CVector::zero(sig);
  if (hint) {
    v = *hint;
    if (std::abs(form_eval(v, xv)) <= kPerpTol * v.euclidean_norm() * xv.euclidean_norm()) {
      throw ConeError(ErrorKind::Domain, "partner hint is orthogonal to x");
    }
  } else {
    // |f(e_j, x)| = |x_j|.
    int best = -1;
    double best_modulus = 0.0;
    for (int j = 0; j < sig.n(); ++j) {
      if (std::abs(xv[j]) > best_modulus) {
        best_modulus = std::abs(xv[j]);
        best = j;
      }
    }
    if (best < 0) throw ConeError(ErrorKind::InternalContract, "no basis vector pairs with x");
    v = CVector::basis(sig, best);
  }
  const CVector scaled = v / form_eval(v, xv);
  return scaled - (0.5 * form_eval(scaled, scaled).real()) * xv;
}

ChartFrame make_chart(const ConePoint& x, const std::optional<CVector>& hint) {
  const Signature& sig = x.signature();
  CVector u = hyperbolic_partner(x, hint);
  std::vector<CVector> mu;
  if (sig.n() > 2) {
    // Project the standard basis onto {x,u}^perp: w - f(w,u) x - f(w,x) u.
    std::vector<CVector> projected;
    for (int j = 0; j < sig.n(); ++j) {
      const CVector w = CVector::basis(sig, j);
      projected.push_back(w - form_eval(w, u) * x.vector() - form_eval(w, x.vector()) * u);
    }
    mu = orthonormalize_indefinite(projected, {sig.p() - 1, sig.q() - 1});
  }
  return {x, std::move(u), std::move(mu)};
}

std::vector<CVector> extend_to_witt_basis(const ConePoint& x) { return make_chart(x).witt_basis(); }

namespace {
constexpr double kKappaTol = 1e-10;
}

ConePoint kappa0(const ChartFrame& chart, double r, const Eigen::VectorXcd& y_coords) {
  const CVector y = chart.mu_vector(y_coords);
  const Complex coefficient(-0.5 * form_eval(y, y).real(), r);
  CVector v = y + chart.u() + coefficient * chart.x().vector();
  if (std::abs(form_eval(chart.x().vector(), v) - 1.0) > kKappaTol) {
    throw ConeError(ErrorKind::InternalContract, "kappa0 lost the normalization f(x, .) = 1");
  }
  return ConePoint::certify(std::move(v), kKappaTol);
}

ProjRep kappa(const ChartFrame& chart, double r, const Eigen::VectorXcd& y_coords) {
  return canonicalize_phase(kappa0(chart, r, y_coords));
}

ChartInverse chart_inverse(const ChartFrame& chart, const ConePoint& b, double tol) {
  const CVector& x = chart.x().vector();
  const Complex pairing = form_eval(b.vector(), x);
  if (std::abs(pairing) <= tol * b.vector().euclidean_norm() * x.euclidean_norm()) return InAperp{};

  const CVector z = b.vector() / pairing;
  const Complex beta = form_eval(z, chart.u());
  const auto& mu = chart.mu_basis();
  const int plus = chart.mu_inertia().plus;
  Eigen::VectorXcd y(static_cast<Eigen::Index>(mu.size()));
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double sign = static_cast<int>(k) < plus ? 1.0 : -1.0;
    y[static_cast<Eigen::Index>(k)] = sign * form_eval(z, mu[k]);
  }
  return ChartPoint{beta.imag(), std::move(y)};
}

bool is_perp(const ConePoint& a, const ConePoint& b, double tol) {
  return std::abs(form_eval(b.vector(), a.vector())) <=
         tol * a.vector().euclidean_norm() * b.vector().euclidean_norm();
}

AperpClass aperp_classify(const ChartFrame& chart, const ConePoint& b, double tol) {
  if (!is_perp(chart.x(), b)) throw ConeError(ErrorKind::Domain, "point is not in a_perp");
  const Signature& sig = chart.signature();
  const int n = sig.n();
  const std::vector<CVector> basis = chart.witt_basis();
  Eigen::VectorXcd c(n);
  for (int k = 0; k < n; ++k) c[k] = sig.eta(k) * form_eval(b.vector(), basis[k]);

  // In x_perp the two hyperbolic coordinates coincide: b = alpha (e_1 + e_n) + middle.
  const Complex alpha = 0.5 * (c[0] + c[n - 1]);
  Eigen::VectorXcd middle = c.segment(1, n - 2);

  AperpClass out;
  const int plus = sig.p() - 1;
  const int minus = sig.q() - 1;
  if (plus == 0 || minus == 0 || middle.norm() <= tol * c.norm()) {
    out.kind = AperpClass::Kind::Apex;
    return out;
  }

  const double rho = std::sqrt(0.5 * middle.squaredNorm());
  middle /= rho;
  const PhaseGauge gauge = pivot_phase_gauge(middle);
  middle *= gauge.phase;
  middle[gauge.pivot_index] = std::abs(middle[gauge.pivot_index]);

  out.kind = AperpClass::Kind::Generic;
  out.alpha = alpha * gauge.phase / rho;
  out.plus_coords = middle.head(plus);
  out.minus_coords = middle.tail(minus);
  return out;
}

ConePoint sample_aperp_point(const ChartFrame& chart, std::uint64_t seed, bool apex) {
  Rng rng(seed, 0xAB);
  const Inertia mu = chart.mu_inertia();
  Complex alpha = rng.complex_normal();
  if (alpha == 0.0) alpha = 1.0;
  CVector v = alpha * chart.x().vector();
  if (!apex && mu.plus > 0 && mu.minus > 0) {
    Eigen::VectorXcd coords(mu.dim());
    coords.head(mu.plus) = rng.unit_sphere(mu.plus);
    coords.tail(mu.minus) = rng.unit_sphere(mu.minus);
    v += std::exp(0.5 * rng.normal()) * chart.mu_vector(coords);
  }
  return ConePoint::certify(rng.nonzero_scalar() * v);
}

namespace {

// b b^dagger / |b|^2 flattened into real coordinates.
Eigen::VectorXd projector_embedding(const Eigen::VectorXcd& b) {
  const Eigen::MatrixXcd p = b * b.adjoint() / b.squaredNorm();
  Eigen::VectorXd out(2 * p.size());
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    out[2 * k] = p.data()[k].real();
    out[2 * k + 1] = p.data()[k].imag();
  }
  return out;
}

}  // namespace

int aperp_dimension_estimate(const ChartFrame& chart, std::uint64_t seed, double step) {
  const Inertia mu = chart.mu_inertia();
  if (mu.plus < 1 || mu.minus < 1) {
    throw ConeError(ErrorKind::Unsupported, "generic stratum of a_perp is empty for p < 2 or q < 2");
  }
  const int params = 2 + 2 * mu.dim();

  // alpha x + w+ + (|w+| / |w-|) w- is null for every nonzero w+, w-.
  const auto point = [&](const Eigen::VectorXd& theta) {
    const Complex alpha(theta[0], theta[1]);
    Eigen::VectorXcd w(mu.dim());
    for (int k = 0; k < mu.dim(); ++k) w[k] = Complex(theta[2 + 2 * k], theta[3 + 2 * k]);
    const double ratio = w.head(mu.plus).norm() / w.tail(mu.minus).norm();
    w.tail(mu.minus) *= ratio;
    return (alpha * chart.x().vector() + chart.mu_vector(w)).coeffs();
  };

  Rng rng(seed, 0xD1);
  Eigen::VectorXd base(params);
  const Complex alpha = rng.complex_normal();
  base[0] = alpha.real();
  base[1] = alpha.imag();
  Eigen::VectorXcd w(mu.dim());
  w.head(mu.plus) = rng.unit_sphere(mu.plus);
  w.tail(mu.minus) = std::exp(0.3 * rng.normal()) * rng.unit_sphere(mu.minus);
  for (int k = 0; k < mu.dim(); ++k) {
    base[2 + 2 * k] = w[k].real();
    base[3 + 2 * k] = w[k].imag();
  }

  const Eigen::Index rows = projector_embedding(point(base)).size();
  Eigen::MatrixXd jacobian(rows, params);
  for (int i = 0; i < params; ++i) {
    Eigen::VectorXd forward = base;
    Eigen::VectorXd backward = base;
    forward[i] += step;
    backward[i] -= step;
    jacobian.col(i) =
        (projector_embedding(point(forward)) - projector_embedding(point(backward))) / (2.0 * step);
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(jacobian).singularValues();
  // Central-difference noise sits near step^2 and eps/step, far below 1e-6.
  const double threshold = 1e-6 * sv[0];
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv[k] > threshold ? 1 : 0;
  return rank;
}

}  // namespace coneq
