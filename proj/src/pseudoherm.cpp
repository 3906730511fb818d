#include "coneq/pseudoherm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace coneq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SignatureMismatch: return "signature-mismatch";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::DegenerateSubspace: return "degenerate-subspace";
    case ErrorKind::NotIsotropic: return "not-isotropic";
    case ErrorKind::NotIsometry: return "not-isometry";
    case ErrorKind::UnsupportedSignature: return "unsupported-signature";
    case ErrorKind::UnsupportedFrame: return "unsupported-frame";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Nondegeneracy: return "nondegeneracy";
    case ErrorKind::InternalContract: return "internal-contract";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 1 || q < 1) {
    throw ConeError(ErrorKind::UnsupportedSignature,
                    "signature (" + std::to_string(p) + "," + std::to_string(q) + ") needs p,q >= 1");
  }
}

Eigen::MatrixXcd Signature::eta_matrix() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n(), n());
  for (int j = 0; j < n(); ++j) m(j, j) = eta(j);
  return m;
}

CVector::CVector(Signature sig, Eigen::VectorXcd coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != sig_.n()) {
    throw ConeError(ErrorKind::SignatureMismatch,
                    "vector of length " + std::to_string(coeffs_.size()) + " in dimension " +
                        std::to_string(sig_.n()));
  }
}

CVector CVector::zero(Signature sig) { return {sig, Eigen::VectorXcd::Zero(sig.n())}; }

CVector CVector::basis(Signature sig, int j) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(sig.n());
  v[j] = 1.0;
  return {sig, std::move(v)};
}

namespace {
void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) throw ConeError(ErrorKind::SignatureMismatch, "operands have different signatures");
}
}  // namespace

CVector& CVector::operator+=(const CVector& other) {
  require_same(sig_, other.sig_);
  coeffs_ += other.coeffs_;
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  require_same(sig_, other.sig_);
  coeffs_ -= other.coeffs_;
  return *this;
}

CVector& CVector::operator*=(Complex c) {
  coeffs_ *= c;
  return *this;
}

Complex form_eval(const CVector& u, const CVector& v) {
  require_same(u.signature(), v.signature());
  const Signature& sig = u.signature();
  Complex plus = 0.0;
  Complex minus = 0.0;
  for (int j = 0; j < sig.p(); ++j) plus += u[j] * std::conj(v[j]);
  for (int j = sig.p(); j < sig.n(); ++j) minus += u[j] * std::conj(v[j]);
  return plus - minus;
}

bool is_isotropic(const CVector& x, double tol) {
  const double norm2 = x.euclidean_norm2();
  if (norm2 == 0.0) throw ConeError(ErrorKind::DegenerateInput, "zero vector");
  return std::abs(form_eval(x, x)) <= tol * norm2;
}

ConePoint ConePoint::certify(CVector v, double tol) {
  const double norm2 = v.euclidean_norm2();
  if (norm2 == 0.0 || !std::isfinite(norm2)) {
    throw ConeError(ErrorKind::DegenerateInput, "cone point must be finite and nonzero");
  }
  const double residual = std::abs(form_eval(v, v)) / norm2;
  if (residual > tol) {
    throw ConeError(ErrorKind::NotIsotropic, "relative isotropy residual " + std::to_string(residual));
  }
  return {std::move(v), residual};
}

ConePoint ConePoint::scaled(Complex c) const { return certify(c * v_); }

std::vector<CVector> orthonormalize_indefinite(std::span<const CVector> vectors, Inertia target,
                                               double tol) {
  std::vector<CVector> work(vectors.begin(), vectors.end());
  double scale = 0.0;
  for (const auto& v : work) scale = std::max(scale, v.euclidean_norm2());
  if (target.dim() == 0) {
    if (scale > 0.0) throw ConeError(ErrorKind::DegenerateSubspace, "nonzero input for empty target");
    return {};
  }
  if (scale == 0.0) throw ConeError(ErrorKind::DegenerateSubspace, "all input vectors vanish");
  const double threshold = tol * scale;

  std::vector<CVector> plus;
  std::vector<CVector> minus;
  while (static_cast<int>(plus.size() + minus.size()) < target.dim()) {
    if (work.empty()) throw ConeError(ErrorKind::DegenerateSubspace, "input spans too small a subspace");

    std::size_t pivot = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const double self = std::abs(form_eval(work[i], work[i]).real());
      if (self > best) {
        best = self;
        pivot = i;
      }
    }
    if (best <= threshold) {
      // Every remaining vector is near the cone: look for a hyperbolic pair.
      double best_pair = 0.0;
      std::size_t a = 0;
      std::size_t b = 0;
      for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = i + 1; j < work.size(); ++j) {
          const double m = std::abs(form_eval(work[i], work[j]));
          if (m > best_pair) {
            best_pair = m;
            a = i;
            b = j;
          }
        }
      }
      if (best_pair <= threshold) {
        throw ConeError(ErrorKind::DegenerateSubspace, "all remaining self-products below tolerance");
      }
      const Complex fab = form_eval(work[a], work[b]);
      work[a] += (fab / std::abs(fab)) * work[b];
      pivot = a;
    }

    CVector v = std::move(work[pivot]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(pivot));
    const double self = form_eval(v, v).real();
    const double sign = self > 0.0 ? 1.0 : -1.0;
    CVector e = v / Complex(std::sqrt(std::abs(self)));
    for (auto& w : work) w -= (sign * form_eval(w, e)) * e;

    auto& bucket = sign > 0.0 ? plus : minus;
    const int cap = sign > 0.0 ? target.plus : target.minus;
    if (static_cast<int>(bucket.size()) >= cap) {
      throw ConeError(ErrorKind::DegenerateSubspace, "span has a different signature than the target");
    }
    bucket.push_back(std::move(e));
  }
  for (const auto& w : work) {
    if (w.euclidean_norm2() > threshold) {
      throw ConeError(ErrorKind::DegenerateSubspace, "input spans more than the target dimension");
    }
  }
  plus.insert(plus.end(), std::make_move_iterator(minus.begin()), std::make_move_iterator(minus.end()));
  return plus;
}

Eigen::MatrixXcd gram_matrix(std::span<const CVector> vectors) {
  const auto k = static_cast<Eigen::Index>(vectors.size());
  Eigen::MatrixXcd g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = form_eval(vectors[i], vectors[j]);
  return g;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x636f6e65u};
  engine_.seed(seq);
}

Complex Rng::nonzero_scalar() {
  const double modulus = std::exp(0.5 * normal());
  const double phase = 2.0 * std::numbers::pi * uniform();
  return std::polar(modulus, phase);
}

Eigen::VectorXcd Rng::unit_sphere(int dim) {
  Eigen::VectorXcd v(dim);
  double norm = 0.0;
  while (norm == 0.0) {
    for (int j = 0; j < dim; ++j) v[j] = complex_normal();
    norm = v.norm();
  }
  return v / norm;
}

ConePoint sample_cone_point(const Signature& sig, std::uint64_t seed) {
  Rng rng(seed, 0xC0);
  Eigen::VectorXcd v(sig.n());
  v.head(sig.p()) = rng.unit_sphere(sig.p());
  v.tail(sig.q()) = rng.unit_sphere(sig.q());
  v *= rng.nonzero_scalar();
  return ConePoint::certify(CVector(sig, std::move(v)));
}

GroupElement::GroupElement(Signature sig, Eigen::MatrixXcd matrix, double tol)
    : sig_(sig), m_(std::move(matrix)) {
  if (m_.rows() != sig_.n() || m_.cols() != sig_.n()) {
    throw ConeError(ErrorKind::SignatureMismatch, "group element has wrong size");
  }
  if (!verify_isometry(m_, sig_, tol)) {
    throw ConeError(ErrorKind::NotIsometry,
                    "pseudo-unitarity residual " + std::to_string(isometry_residual(m_, sig_)));
  }
}

CVector GroupElement::apply(const CVector& v) const {
  require_same(sig_, v.signature());
  return {sig_, m_ * v.coeffs()};
}

CVector GroupElement::column(int j) const { return {sig_, m_.col(j)}; }

double isometry_residual(const Eigen::MatrixXcd& m, const Signature& sig) {
  if (m.rows() != sig.n() || m.cols() != sig.n()) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXcd eta = sig.eta_matrix();
  return (m.adjoint() * eta * m - eta).cwiseAbs().maxCoeff();
}

bool verify_isometry(const Eigen::MatrixXcd& m, const Signature& sig, double tol) {
  return isometry_residual(m, sig) <= tol;
}

Eigen::MatrixXcd sample_pseudo_unitary_generator(const Signature& sig, std::uint64_t seed) {
  Rng rng(seed, 0xA1);
  const int n = sig.n();
  Eigen::MatrixXcd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = rng.complex_normal();
  // K anti-Hermitian => A = eta K satisfies A^dagger eta + eta A = K^dagger + K = 0.
  const Eigen::MatrixXcd k = b - b.adjoint();
  return (0.5 / std::sqrt(static_cast<double>(n))) * sig.eta_matrix() * k;
}

Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Eigen::MatrixXcd b = a / std::ldexp(1.0, squarings);

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int k = 1; k < 64; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() <= eps * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

GroupElement sample_pseudo_unitary(const Signature& sig, std::uint64_t seed) {
  return {sig, matrix_exp(sample_pseudo_unitary_generator(sig, seed))};
}

}  // namespace coneq
