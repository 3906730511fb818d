#pragma once

// Indefinite complex linear algebra on the standard space H_{p,q}:
// the form f(u,v) = sum_j eta_j u^j conj(v^j), isotropy tests, pivoted
// orthonormalization and seeded sampling of cone points and U(p,q) elements.

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "coneq/error.hpp"

namespace coneq {

using Complex = std::complex<double>;

/// Relative tolerance used to certify cone points, isometries and frames.
inline constexpr double kCertifyTol = 1e-9;

/// Number of +1 and -1 entries of a diagonal form. Unlike Signature either
/// count may be zero; used for subspaces such as M_u in signature (1,q).
struct Inertia {
  int plus = 0;
  int minus = 0;
  int dim() const { return plus + minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Signature (p,q) of H_{p,q}, p,q >= 1; eta = diag(+1 x p, -1 x q).
class Signature {
 public:
  Signature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  /// Diagonal entry eta_jj (0-based index).
  double eta(int j) const { return j < p_ ? 1.0 : -1.0; }
  Eigen::MatrixXcd eta_matrix() const;
  Inertia inertia() const { return {p_, q_}; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

/// A vector of H_{p,q}: n complex components tagged with their signature.
class CVector {
 public:
  CVector(Signature sig, Eigen::VectorXcd coeffs);

  static CVector zero(Signature sig);
  /// Standard basis vector e_j (0-based).
  static CVector basis(Signature sig, int j);

  const Signature& signature() const { return sig_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  Complex operator[](int j) const { return coeffs_[j]; }

  double euclidean_norm() const { return coeffs_.norm(); }
  double euclidean_norm2() const { return coeffs_.squaredNorm(); }

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(Complex c);

  friend CVector operator+(CVector a, const CVector& b) { return a += b; }
  friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
  friend CVector operator*(Complex c, CVector a) { return a *= c; }
  friend CVector operator*(CVector a, Complex c) { return a *= c; }
  friend CVector operator/(CVector a, Complex c) { return a *= (1.0 / c); }

 private:
  Signature sig_;
  Eigen::VectorXcd coeffs_;
};

/// f(u,v) = sum_j eta_j u^j conj(v^j); linear in u, conjugate-linear in v.
Complex form_eval(const CVector& u, const CVector& v);

/// |f(x,x)| <= tol * |x|^2 (Euclidean). Throws DegenerateInput on x = 0.
bool is_isotropic(const CVector& x, double tol = kCertifyTol);

/// A nonzero isotropic vector, certified at construction.
class ConePoint {
 public:
  /// Throws NotIsotropic or DegenerateInput.
  static ConePoint certify(CVector v, double tol = kCertifyTol);

  const CVector& vector() const { return v_; }
  const Signature& signature() const { return v_.signature(); }
  /// |f(x,x)| / |x|^2 at certification time.
  double isotropy_residual() const { return residual_; }

  /// c * x for c != 0, re-certified.
  ConePoint scaled(Complex c) const;

 private:
  ConePoint(CVector v, double residual) : v_(std::move(v)), residual_(residual) {}

  CVector v_;
  double residual_;
};

/// Pivoted Gram-Schmidt for the indefinite form. Returns an eta-orthonormal
/// family with `target.plus` vectors of norm +1 followed by `target.minus`
/// of norm -1, spanning the same subspace as `vectors`. The pivot is the
/// remaining vector with largest |f(v,v)| (lowest index on ties); when all
/// remaining vectors are near-isotropic but pair nontrivially, two of them are
/// combined into a non-isotropic one. Extra input vectors must be linearly
/// dependent on the rest. Throws DegenerateSubspace.
std::vector<CVector> orthonormalize_indefinite(std::span<const CVector> vectors, Inertia target,
                                               double tol = kCertifyTol);

/// Gram matrix [f(v_i, v_j)].
Eigen::MatrixXcd gram_matrix(std::span<const CVector> vectors);

/// Seeded random stream. Each (seed, stream) pair is an independent generator,
/// so trials of a suite draw from disjoint streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  /// Complex entry from a pair of standard normals.
  Complex complex_normal() { return {normal(), normal()}; }
  /// Random element of C* with log-normal modulus and uniform phase.
  Complex nonzero_scalar();
  /// Uniform point on the unit sphere of C^dim.
  Eigen::VectorXcd unit_sphere(int dim);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// x = c (x_+ + x_-) with x_+, x_- uniform on the unit spheres of the standard
/// V_+ and V_-, and random c in C*. Deterministic in `seed`.
ConePoint sample_cone_point(const Signature& sig, std::uint64_t seed);

/// An element of U(p,q): U^dagger eta U = eta.
class GroupElement {
 public:
  /// Throws NotIsometry if the residual exceeds tol.
  GroupElement(Signature sig, Eigen::MatrixXcd matrix, double tol = kCertifyTol);

  const Signature& signature() const { return sig_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  CVector apply(const CVector& v) const;
  /// Image U e_j of the j-th standard basis vector.
  CVector column(int j) const;

 private:
  Signature sig_;
  Eigen::MatrixXcd m_;
};

/// max_ij |(U^dagger eta U - eta)_ij|.
double isometry_residual(const Eigen::MatrixXcd& m, const Signature& sig);

/// True iff isometry_residual(m) <= tol.
bool verify_isometry(const Eigen::MatrixXcd& m, const Signature& sig, double tol = kCertifyTol);
inline bool verify_isometry(const GroupElement& g, double tol = kCertifyTol) {
  return verify_isometry(g.matrix(), g.signature(), tol);
}

/// Random generator A with A^dagger eta + eta A = 0, scaled to O(1) norm.
Eigen::MatrixXcd sample_pseudo_unitary_generator(const Signature& sig, std::uint64_t seed);

/// exp(A) by scaling and squaring with a Taylor series truncated at machine
/// precision.
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a);

/// exp(A) for a random eta-anti-Hermitian A.
GroupElement sample_pseudo_unitary(const Signature& sig, std::uint64_t seed);

}  // namespace coneq
