#pragma once

// Witt-basis completion of a cone point and the compactification chart
// kappa: R x M_u -> Q~ \ a_perp, with its inverse and the structure of the
// boundary set a_perp.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "coneq/pseudoherm.hpp"
#include "coneq/quotients.hpp"

namespace coneq {

/// Chart centered at a = P(x): an isotropic partner u with f(u,x) = 1 and an
/// eta-orthonormal basis of M_u = {x, u}^perp, positive vectors first.
class ChartFrame {
 public:
  /// Certifies f(u,u) = 0, f(u,x) = 1, the M_u Gram matrix and orthogonality
  /// to x and u, all within tol. Throws InternalContract on failure.
  ChartFrame(ConePoint x, CVector u, std::vector<CVector> mu_basis, double tol = kCertifyTol);

  const ConePoint& x() const { return x_; }
  const CVector& u() const { return u_; }
  const std::vector<CVector>& mu_basis() const { return mu_; }
  const Signature& signature() const { return x_.signature(); }
  /// Signature (p-1, q-1) of M_u.
  Inertia mu_inertia() const;
  /// e_1 = x/2 + u, e_2..e_{n-1} = mu_basis, e_n = x/2 - u.
  std::vector<CVector> witt_basis() const;
  /// y = sum_k coords_k m_k.
  CVector mu_vector(const Eigen::VectorXcd& coords) const;

 private:
  ConePoint x_;
  CVector u_;
  std::vector<CVector> mu_;
};

/// Isotropic u with f(u,x) = 1: v' = v / f(v,x), u = v' - f(v',v')/2 x. Without
/// a hint, v is the standard basis vector with largest |f(e_j, x)|.
CVector hyperbolic_partner(const ConePoint& x, const std::optional<CVector>& hint = std::nullopt);

ChartFrame make_chart(const ConePoint& x, const std::optional<CVector>& hint = std::nullopt);

/// An eta-orthonormal basis with x = e_1 + e_n.
std::vector<CVector> extend_to_witt_basis(const ConePoint& x);

/// y + u + (-(y,y)/2 + r i) x with y = sum y_coords_k m_k; isotropic with f(x, .) = 1.
ConePoint kappa0(const ChartFrame& chart, double r, const Eigen::VectorXcd& y_coords);

/// P o kappa0, as a canonical phase representative.
ProjRep kappa(const ChartFrame& chart, double r, const Eigen::VectorXcd& y_coords);

struct ChartPoint {
  double r;
  Eigen::VectorXcd y_coords;
};

/// The class lies in a_perp and is not covered by the chart.
struct InAperp {};

using ChartInverse = std::variant<ChartPoint, InAperp>;

/// |f(b, x)| threshold, relative to |b| |x|, for both chart_inverse and is_perp.
inline constexpr double kPerpTol = 1e-9;

/// Writes b / f(b,x) = y + u + beta x and returns (Im beta, y), or InAperp.
ChartInverse chart_inverse(const ChartFrame& chart, const ConePoint& b, double tol = kPerpTol);

/// |f(b, a)| <= tol |a| |b|.
bool is_perp(const ConePoint& a, const ConePoint& b, double tol = kPerpTol);

struct AperpClass {
  enum class Kind { Apex, Generic };
  Kind kind = Kind::Apex;
  /// Coefficient of x after normalization (1 for the apex).
  Complex alpha{1.0, 0.0};
  /// Middle coordinates on the unit spheres of C^{p-1} and C^{q-1}, jointly phase-gauged.
  Eigen::VectorXcd plus_coords;
  Eigen::VectorXcd minus_coords;
};

/// Classifies b in a_perp by its coordinates b = alpha x + sum alpha^j e_j in the
/// chart's Witt basis. Throws Domain if b is not in a_perp.
AperpClass aperp_classify(const ChartFrame& chart, const ConePoint& b, double tol = kCertifyTol);

/// Random point of a_perp: the apex class when `apex` or when p or q is 1,
/// otherwise alpha x plus a random null vector of M_u, times a random c in C*.
ConePoint sample_aperp_point(const ChartFrame& chart, std::uint64_t seed, bool apex);

/// Rank of the finite-difference Jacobian of a local parametrization of the
/// generic stratum of a_perp, composed with the embedding [b] -> b b^dagger / |b|^2
/// of projective space. Throws Unsupported if p < 2 or q < 2.
int aperp_dimension_estimate(const ChartFrame& chart, std::uint64_t seed, double step = 1e-5);

}  // namespace coneq
