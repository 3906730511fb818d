#pragma once

// The quotients Q -> Q' = Q/R+ -> Q~ = Q'/U(1) realized by canonical
// representatives: Q_s (unit positive and negative parts w.r.t. a split s)
// for Q', plus a pivot-phase gauge for Q~.

#include <string>
#include <vector>

#include "coneq/pseudoherm.hpp"

namespace coneq {

/// An orthogonal decomposition V = V+ (+) V- given by an eta-orthonormal basis;
/// the first p vectors span V+, the last q span V-.
class Split {
 public:
  /// Throws NotIsometry unless the Gram matrix of `basis` is eta within tol.
  Split(Signature sig, std::vector<CVector> basis, std::string id, double tol = kCertifyTol);

  static Split standard(const Signature& sig);
  /// The standard split transported by g: basis g e_j.
  static Split transported(const GroupElement& g, std::string id = "transported");

  const Signature& signature() const { return sig_; }
  const std::vector<CVector>& basis() const { return basis_; }
  const std::string& id() const { return id_; }

  /// Coordinates c with x = sum_j c_j e_j, i.e. c_j = eta_j f(x, e_j).
  Eigen::VectorXcd coordinates(const CVector& x) const;
  CVector from_coordinates(const Eigen::VectorXcd& c) const;

 private:
  Signature sig_;
  std::vector<CVector> basis_;
  std::string id_;
};

struct SplitParts {
  CVector plus;
  CVector minus;
  /// R = sqrt(f(x+,x+)) = sqrt(-f(x-,x-)).
  double radius;
};

/// x = x+ + x- along the split. Throws DegenerateInput if R vanishes.
SplitParts split_decompose(const ConePoint& x, const Split& s);

/// Representative of the R+ class lying in Q_s.
class RayRep {
 public:
  RayRep(ConePoint vector, Split split);

  const ConePoint& vector() const { return x_; }
  const Split& split() const { return split_; }
  /// Unit vector in C^p: coordinates of x+ in the split basis (point of S^{2p-1}).
  Eigen::VectorXcd plus_sphere() const;
  /// Unit vector in C^q: coordinates of x- (point of S^{2q-1}).
  Eigen::VectorXcd minus_sphere() const;
  double plus_norm() const;
  double minus_norm() const;

 private:
  ConePoint x_;
  Split split_;
};

/// Representative of the C* class: a RayRep whose pivot coordinate is real positive.
struct ProjRep {
  RayRep ray;
  /// 0-based index of the coordinate rotated onto the positive real axis.
  int pivot_index;

  const ConePoint& vector() const { return ray.vector(); }
};

struct PhaseGauge {
  int pivot_index;
  /// Unit scalar that makes the pivot coordinate real positive.
  Complex phase;
};

/// Pivot-phase gauge of a coordinate vector: the maximal-modulus entry
/// (lowest index among entries within `tie_tol` relative of the maximum).
/// Throws DegenerateInput on the zero vector.
PhaseGauge pivot_phase_gauge(const Eigen::VectorXcd& coords, double tie_tol = 1e-12);

/// x / R(x); idempotent.
RayRep canonicalize_ray(const ConePoint& x, const Split& s);
RayRep canonicalize_ray(const ConePoint& x);

/// canonicalize_ray followed by the pivot-phase gauge on the ambient coordinates.
ProjRep canonicalize_phase(const ConePoint& x, const Split& s);
ProjRep canonicalize_phase(const ConePoint& x);

/// Same point of Q~: canonical phase representatives agree componentwise within tol.
bool proj_equivalent(const ConePoint& x, const ConePoint& y, double tol = kCertifyTol);

struct TorusAngles {
  double phi1;
  double phi2;
};

/// Angles in [0, 2pi) of the two components of canonicalize_ray(x); signature (1,1) only.
TorusAngles torus_coords(const ConePoint& x);

}  // namespace coneq
