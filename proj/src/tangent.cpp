#include "coneq/tangent.hpp"

#include <cmath>
#include <string>

#include "coneq/witt.hpp"

namespace coneq {

namespace {
constexpr Complex kI{0.0, 1.0};
}

TangentFrame::TangentFrame(ConePoint x, std::vector<CVector> vectors, std::vector<std::string> labels,
                           double tol)
    : x_(std::move(x)), vectors_(std::move(vectors)), labels_(std::move(labels)) {
  if (labels_.size() != vectors_.size()) {
    throw ConeError(ErrorKind::InternalContract, "tangent frame needs one label per vector");
  }
  const double xn = x_.vector().euclidean_norm();
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    const double drift = std::abs(form_eval(vectors_[k], x_.vector()).real());
    if (drift > tol * vectors_[k].euclidean_norm() * xn) {
      throw ConeError(ErrorKind::Domain, "frame vector " + labels_[k] + " is not tangent to Q");
    }
  }
}

TangentFrame TangentFrame::transported(double lambda) const {
  std::vector<CVector> scaled;
  scaled.reserve(vectors_.size());
  for (const auto& v : vectors_) scaled.push_back(lambda * v);
  return {x_.scaled(lambda), std::move(scaled), labels_};
}

TangentFrame TangentFrame::shifted(std::span<const double> shifts) const {
  if (shifts.size() != vectors_.size()) {
    throw ConeError(ErrorKind::InternalContract, "one shift per frame vector");
  }
  std::vector<CVector> moved;
  moved.reserve(vectors_.size());
  for (std::size_t k = 0; k < vectors_.size(); ++k) moved.push_back(vectors_[k] + shifts[k] * x_.vector());
  return {x_, std::move(moved), labels_};
}

TangentFrame AdaptedFrame::quotient() const {
  std::vector<CVector> vectors(tangent.vectors().begin() + 1, tangent.vectors().end());
  std::vector<std::string> labels(tangent.labels().begin() + 1, tangent.labels().end());
  return {x, std::move(vectors), std::move(labels)};
}

AdaptedFrame adapted_frame(const ConePoint& x) {
  std::vector<CVector> witt = extend_to_witt_basis(x);
  const int n = x.signature().n();
  const std::string last = std::to_string(n);
  std::vector<CVector> vectors{x.vector(), kI * x.vector(), kI * (witt.front() - witt.back())};
  std::vector<std::string> labels{"x", "ix", "i(e1-e" + last + ")"};
  for (int j = 1; j + 1 < n; ++j) {
    const std::string name = "e" + std::to_string(j + 1);
    vectors.push_back(witt[j]);
    labels.push_back(name);
    vectors.push_back(kI * witt[j]);
    labels.push_back("i" + name);
  }
  TangentFrame tangent(x, std::move(vectors), std::move(labels));
  return {x, std::move(witt), std::move(tangent)};
}

namespace {

struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  double norm;
};

Spectrum spectrum(const Eigen::MatrixXd& g) {
  if (g.rows() == 0) return {Eigen::VectorXd(), Eigen::MatrixXd(), 0.0};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
  Spectrum s{solver.eigenvalues(), solver.eigenvectors(), 0.0};
  s.norm = s.values.cwiseAbs().maxCoeff();
  return s;
}

MetricSignature count_signature(const Spectrum& s, double tol) {
  MetricSignature sig;
  const double threshold = tol * s.norm;
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    if (s.values[k] > threshold) {
      ++sig.plus;
    } else if (s.values[k] < -threshold) {
      ++sig.minus;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

}  // namespace

MetricSignature metric_signature(const Eigen::MatrixXd& g, double tol) {
  if (g.rows() != g.cols()) throw ConeError(ErrorKind::Domain, "metric must be square");
  return count_signature(spectrum(0.5 * (g + g.transpose())), tol);
}

MetricMatrix::MetricMatrix(Eigen::MatrixXd entries, std::vector<std::string> labels, double tol,
                           double reference_scale)
    : entries_(0.5 * (entries + entries.transpose())), labels_(std::move(labels)) {
  if (entries.rows() != entries.cols()) throw ConeError(ErrorKind::Domain, "metric must be square");
  if (static_cast<Eigen::Index>(labels_.size()) != entries_.rows()) {
    throw ConeError(ErrorKind::InternalContract, "metric needs one label per basis vector");
  }
  Spectrum s = spectrum(entries_);
  s.norm = std::max(s.norm, reference_scale);
  signature_ = count_signature(s, tol);
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    if (std::abs(s.values[k]) <= tol * s.norm) radical_.push_back(s.vectors.col(k));
  }
}

MetricMatrix induced_metric(const TangentFrame& frame) {
  const int k = frame.size();
  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = form_eval(frame.vectors()[i], frame.vectors()[j]).real();
  return {std::move(g), frame.labels()};
}

MetricMatrix induced_metric(const ConePoint& x, FrameChoice choice) {
  if (choice == FrameChoice::Adapted) return induced_metric(adapted_frame(x).quotient());
  if (x.signature().n() != 2) {
    throw ConeError(ErrorKind::UnsupportedFrame, "epsilon frame exists only in signature (1,1)");
  }
  const std::vector<CVector> witt = extend_to_witt_basis(x);
  return induced_metric(TangentFrame(x, {kI * witt[0], kI * witt[1]}, {"eps1", "eps2"}));
}

double skew_form(const ConePoint& x, const CVector& X, const CVector& Y, double tol) {
  const double xn = x.vector().euclidean_norm();
  for (const CVector* v : {&X, &Y}) {
    if (std::abs(form_eval(*v, x.vector()).real()) > tol * v->euclidean_norm() * xn) {
      throw ConeError(ErrorKind::Domain, "skew form argument is not tangent to Q");
    }
  }
  return form_eval(X, Y).imag();
}

MetricMatrix cotangent_metric(const MetricMatrix& g, const Eigen::VectorXd& vertical) {
  const Eigen::Index k = g.entries().rows();
  if (vertical.size() != k || vertical.norm() == 0.0) {
    throw ConeError(ErrorKind::Domain, "vertical direction must be a nonzero frame vector");
  }
  if (g.signature().zero != 0) throw ConeError(ErrorKind::Nondegeneracy, "metric on T Q' is singular");
  const Eigen::MatrixXd inverse = g.entries().inverse();

  // Basis of the covectors annihilating `vertical`.
  Eigen::MatrixXd annihilator(k, k - 1);
  std::vector<std::string> labels;
  Eigen::Index axis = -1;
  if ((vertical.array() != 0.0).count() == 1) vertical.cwiseAbs().maxCoeff(&axis);
  if (axis >= 0) {
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (i == axis) continue;
      annihilator.col(col++) = Eigen::VectorXd::Unit(k, i);
      labels.push_back("d" + g.labels()[static_cast<std::size_t>(i)]);
    }
  } else {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(vertical);
    const Eigen::MatrixXd q = qr.householderQ();
    annihilator = q.rightCols(k - 1);
    for (Eigen::Index i = 0; i + 1 < k; ++i) labels.push_back("w" + std::to_string(i));
  }
  const double scale = spectrum(inverse).norm;
  return {annihilator.transpose() * inverse * annihilator, std::move(labels), kCertifyTol, scale};
}

MetricMatrix cotangent_metric_qtilde(const TangentFrame& quotient_frame) {
  // Coordinates of ix modulo R x: least squares on [v_1 .. v_k, x] as real 2n-vectors.
  const int n = quotient_frame.x().signature().n();
  const int k = quotient_frame.size();
  const auto as_real = [n](const CVector& v) {
    Eigen::VectorXd out(2 * n);
    out << v.coeffs().real(), v.coeffs().imag();
    return out;
  };
  Eigen::MatrixXd system(2 * n, k + 1);
  for (int i = 0; i < k; ++i) system.col(i) = as_real(quotient_frame.vectors()[static_cast<std::size_t>(i)]);
  system.col(k) = as_real(quotient_frame.x().vector());
  const Eigen::VectorXd rhs = as_real(kI * quotient_frame.x().vector());
  Eigen::VectorXd solution = system.colPivHouseholderQr().solve(rhs);
  Eigen::VectorXd vertical = solution.head(k);
  // Clean roundoff so an exact frame axis is recognized as such.
  const double scale = vertical.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < k; ++i)
    if (std::abs(vertical[i]) <= 1e-13 * scale) vertical[i] = 0.0;
  return cotangent_metric(induced_metric(quotient_frame), vertical);
}

MetricMatrix cotangent_metric_qtilde(const ConePoint& x) {
  return cotangent_metric_qtilde(adapted_frame(x).quotient());
}

MetricMatrix dualize_degenerate(int w_dim, const Eigen::MatrixXd& inclusion, const Eigen::MatrixXd& f1) {
  if (inclusion.rows() != w_dim || inclusion.cols() != f1.rows() || f1.rows() != f1.cols()) {
    throw ConeError(ErrorKind::Domain, "inclusion must be W_dim x dim W1 and f1 square");
  }
  const Eigen::MatrixXd sym = 0.5 * (f1 + f1.transpose());
  if (sym.rows() > 0 && metric_signature(sym).zero != 0) {
    throw ConeError(ErrorKind::Nondegeneracy, "f1 is singular");
  }
  if (inclusion.cols() > 0) {
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(inclusion).singularValues();
    if (sv[sv.size() - 1] <= kCertifyTol * sv[0]) {
      throw ConeError(ErrorKind::Domain, "inclusion does not have full column rank");
    }
  }
  Eigen::MatrixXd dual = Eigen::MatrixXd::Zero(w_dim, w_dim);
  if (inclusion.cols() > 0) dual = inclusion * sym.inverse() * inclusion.transpose();
  std::vector<std::string> labels;
  for (int i = 0; i < w_dim; ++i) labels.push_back("w" + std::to_string(i));
  return {std::move(dual), std::move(labels)};
}

TangentFrame sphere_product_frame(const RayRep& rep) {
  const ConePoint& x = rep.vector();
  const Split& split = rep.split();
  const int p = split.signature().p();
  const Eigen::VectorXcd cx = split.coordinates(x.vector());
  const TangentFrame quotient = adapted_frame(x).quotient();
  std::vector<CVector> vectors;
  for (const auto& v : quotient.vectors()) {
    const Eigen::VectorXcd cv = split.coordinates(v);
    // Re f(V+, x+) in the split basis; x already has unit parts.
    const double shift = cx.head(p).dot(cv.head(p)).real();
    vectors.push_back(v - shift * x.vector());
  }
  return {x, std::move(vectors), quotient.labels()};
}

CVector transfer_tangent(const ConePoint& y, const CVector& X, const Split& to) {
  const Eigen::VectorXcd cy = to.coordinates(y.vector());
  const Eigen::VectorXcd cx = to.coordinates(X);
  // r^2 = (|c+|^2 + |c-|^2) / 2 equals the split radius squared on the cone.
  const double radius = std::sqrt(0.5 * cy.squaredNorm());
  const double d_radius2 = cy.dot(cx).real();
  const double d_radius = d_radius2 / (2.0 * radius);
  return (1.0 / radius) * X - (d_radius / (radius * radius)) * y.vector();
}

}  // namespace coneq
