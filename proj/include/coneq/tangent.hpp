#pragma once

// Tangent-space linear algebra at a cone point x: T_xQ = {X : Re f(X,x) = 0},
// the induced metric on T Q' = T_xQ / R x, the skew form Im f and the
// degenerate cometric on T* Q~.

#include <string>
#include <vector>

#include "coneq/pseudoherm.hpp"
#include "coneq/quotients.hpp"

namespace coneq {

/// Real tangent vectors at x, each certified to satisfy Re f(X,x) = 0.
class TangentFrame {
 public:
  TangentFrame(ConePoint x, std::vector<CVector> vectors, std::vector<std::string> labels,
               double tol = kCertifyTol);

  const ConePoint& x() const { return x_; }
  const std::vector<CVector>& vectors() const { return vectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int size() const { return static_cast<int>(vectors_.size()); }

  /// Frame at lambda x tangent to the lifted curves lambda x(t): each vector scaled by lambda.
  TangentFrame transported(double lambda) const;
  /// Other lifts of the same Q' directions: v_i + shifts_i x.
  TangentFrame shifted(std::span<const double> shifts) const;

 private:
  ConePoint x_;
  std::vector<CVector> vectors_;
  std::vector<std::string> labels_;
};

/// Witt basis of x (x = e_1 + e_n) with the tangent basis
/// {x, ix, i(e_1 - e_n)} u {e_j, i e_j : 1 < j < n}.
struct AdaptedFrame {
  ConePoint x;
  std::vector<CVector> witt_basis;
  TangentFrame tangent;

  /// The tangent basis without x: 2n-2 vectors whose classes span T Q'.
  TangentFrame quotient() const;
};

AdaptedFrame adapted_frame(const ConePoint& x);

struct MetricSignature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  friend bool operator==(const MetricSignature&, const MetricSignature&) = default;
};

/// Eigenvalue counts above tol*|G|, below -tol*|G| and in between (|G| spectral norm).
MetricSignature metric_signature(const Eigen::MatrixXd& g, double tol = kCertifyTol);

/// Real symmetric matrix with labels, signature and an orthonormal radical basis.
class MetricMatrix {
 public:
  /// Symmetrizes `entries` and computes signature and radical with eigenvalue
  /// threshold tol * max(|entries|, reference_scale).
  MetricMatrix(Eigen::MatrixXd entries, std::vector<std::string> labels, double tol = kCertifyTol,
               double reference_scale = 0.0);

  const Eigen::MatrixXd& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const MetricSignature& signature() const { return signature_; }
  const std::vector<Eigen::VectorXd>& radical_basis() const { return radical_; }
  int rank() const { return signature_.plus + signature_.minus; }

 private:
  Eigen::MatrixXd entries_;
  std::vector<std::string> labels_;
  MetricSignature signature_;
  std::vector<Eigen::VectorXd> radical_;
};

enum class FrameChoice { Adapted, Epsilon };

/// [Re f(v_i, v_j)] over the frame vectors.
MetricMatrix induced_metric(const TangentFrame& frame);

/// Adapted: over AdaptedFrame::quotient(). Epsilon: over {i e_1, i e_2} in
/// signature (1,1) only (UnsupportedFrame otherwise).
MetricMatrix induced_metric(const ConePoint& x, FrameChoice choice);

/// F_x(X,Y) = Im f(X,Y) for X, Y in T_xQ; throws Domain for non-tangent arguments.
double skew_form(const ConePoint& x, const CVector& X, const CVector& Y, double tol = kCertifyTol);

/// Cometric on the covectors of T Q' that annihilate `vertical` (frame
/// coordinates of the U(1) orbit direction): N^T G^{-1} N for a basis N of
/// vertical^perp. Rank is judged against |G^{-1}|, so a restriction that
/// vanishes up to roundoff has rank 0. Throws Nondegeneracy if G is singular.
MetricMatrix cotangent_metric(const MetricMatrix& g, const Eigen::VectorXd& vertical);

/// The degenerate cometric on T*_a Q~ computed in the adapted frame at x,
/// vertical direction ix.
MetricMatrix cotangent_metric_qtilde(const ConePoint& x);
MetricMatrix cotangent_metric_qtilde(const TangentFrame& quotient_frame);

/// iota f1^{-1} iota^T for iota: W1 -> W (W_dim x dim W1, full column rank).
/// Throws Nondegeneracy if f1 is singular, Domain on shape or rank errors.
MetricMatrix dualize_degenerate(int w_dim, const Eigen::MatrixXd& inclusion, const Eigen::MatrixXd& f1);

/// Tangent frame of the cross-section Q_s at a point of Q_s: the adapted
/// quotient vectors shifted along x so that Re f(X+, x+) = Re f(X-, x-) = 0.
TangentFrame sphere_product_frame(const RayRep& rep);

/// Differential at y of the map Q -> Q_to, y -> y / R_to(y), applied to X.
CVector transfer_tangent(const ConePoint& y, const CVector& X, const Split& to);

}  // namespace coneq
