#include "coneq/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "coneq/exact.hpp"
#include "coneq/quotients.hpp"
#include "coneq/tangent.hpp"
#include "coneq/witt.hpp"

namespace coneq {

namespace {

using TrialFn = std::function<TrialOutcome(const Signature&, std::uint64_t, double)>;

constexpr Complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

TrialOutcome check(double residual, double tol, std::string note = {}) {
  return {residual, residual <= tol, std::move(note)};
}

CVector random_vector(const Signature& sig, Rng& rng) {
  Eigen::VectorXcd v(sig.n());
  for (int j = 0; j < sig.n(); ++j) v[j] = rng.complex_normal();
  return {sig, std::move(v)};
}

Eigen::VectorXcd random_coords(int dim, Rng& rng) {
  Eigen::VectorXcd v(dim);
  for (int j = 0; j < dim; ++j) v[j] = rng.complex_normal();
  return v;
}

Split random_split(const Signature& sig, std::uint64_t seed) {
  return Split::transported(sample_pseudo_unitary(sig, seed), "random");
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

exact::QGaussian random_rational(Rng& rng) {
  const auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng.uniform() * (hi - lo + 1)); };
  return {mpq_class(pick(-9, 9), pick(1, 6)), mpq_class(pick(-9, 9), pick(1, 6))};
}

// ---- pseudoherm_core -------------------------------------------------------

TrialOutcome hermitian(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const CVector u = random_vector(sig, rng);
  const CVector v = random_vector(sig, rng);
  return check(std::abs(form_eval(v, u) - std::conj(form_eval(u, v))), tol);
}

TrialOutcome sesquilinear(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const CVector u = random_vector(sig, rng);
  const CVector v = random_vector(sig, rng);
  const CVector w = random_vector(sig, rng);
  const Complex alpha = rng.complex_normal();
  const Complex lhs = form_eval(alpha * u + w, v);
  const Complex rhs = alpha * form_eval(u, v) + form_eval(w, v);
  const double scale = (std::abs(alpha) * u.euclidean_norm() + w.euclidean_norm()) * v.euclidean_norm();
  return check(std::abs(lhs - rhs) / scale, tol);
}

TrialOutcome pu_invariance(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const GroupElement g = sample_pseudo_unitary(sig, seed);
  const CVector u = random_vector(sig, rng);
  const CVector v = random_vector(sig, rng);
  const Complex before = form_eval(u, v);
  const Complex after = form_eval(g.apply(u), g.apply(v));
  return check(std::abs(after - before) / (1.0 + std::abs(before)), tol);
}

TrialOutcome orthonormalize(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  std::vector<CVector> input;
  for (int j = 0; j < sig.n(); ++j) input.push_back(random_vector(sig, rng));
  const std::vector<CVector> basis = orthonormalize_indefinite(input, sig.inertia());
  return check(max_abs(gram_matrix(basis) - sig.eta_matrix()), tol);
}

TrialOutcome cone_sampling(const Signature& sig, std::uint64_t seed, double tol) {
  const ConePoint x = sample_cone_point(sig, seed);
  const double residual = std::abs(form_eval(x.vector(), x.vector())) / x.vector().euclidean_norm2();
  return {residual, is_isotropic(x.vector(), tol), {}};
}

// ---- cone_quotients ---------------------------------------------------------

TrialOutcome cross_section(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const ConePoint x = sample_cone_point(sig, seed);
  const Split s = random_split(sig, seed);
  const RayRep rep = canonicalize_ray(x, s);
  const double lambda = std::exp(rng.normal());
  const RayRep scaled = canonicalize_ray(x.scaled(lambda), s);
  const double drift = max_abs(scaled.vector().vector().coeffs() - rep.vector().vector().coeffs());
  const double residual =
      std::max({std::abs(rep.plus_norm() - 1.0), std::abs(rep.minus_norm() - 1.0), drift});
  return check(residual, tol);
}

TrialOutcome sphere_chart(const Signature& sig, std::uint64_t seed, double tol) {
  const ConePoint x = sample_cone_point(sig, seed);
  const Split s = random_split(sig, seed);
  const RayRep rep = canonicalize_ray(x, s);
  const SplitParts parts = split_decompose(rep.vector(), s);
  const CVector rebuilt = parts.plus + parts.minus;
  const double residual =
      std::max(max_abs(rebuilt.coeffs() - rep.vector().vector().coeffs()), std::abs(parts.radius - 1.0));
  return check(residual, tol);
}

TrialOutcome phase_retraction(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const ConePoint x = sample_cone_point(sig, seed);
  const ProjRep once = canonicalize_phase(x);
  const ProjRep twice = canonicalize_phase(once.vector());
  const ProjRep moved = canonicalize_phase(x.scaled(rng.nonzero_scalar()));
  const Eigen::VectorXcd& ref = once.vector().vector().coeffs();
  const double residual = std::max(max_abs(twice.vector().vector().coeffs() - ref),
                                   max_abs(moved.vector().vector().coeffs() - ref));
  return check(residual, tol);
}

TrialOutcome u1_invariance(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const ConePoint x = sample_cone_point(sig, seed);
  const Split s = random_split(sig, seed);
  const Complex c = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  const RayRep rotated = canonicalize_ray(x.scaled(c), s);
  const RayRep base = canonicalize_ray(x, s);
  return check(max_abs(rotated.vector().vector().coeffs() - c * base.vector().vector().coeffs()), tol);
}

// ---- tangent_metrics ---------------------------------------------------------

double relative_max(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double scale = max_abs(b);
  return scale == 0.0 ? max_abs(a) : max_abs(a - b) / scale;
}

TrialOutcome lemma1(const Signature& sig, std::uint64_t seed, double tol) {
  const ConePoint x = sample_cone_point(sig, seed);
  const TangentFrame frame = adapted_frame(x).quotient();
  const Eigen::MatrixXd g = induced_metric(frame).entries();
  double worst = 0.0;
  for (double lambda : {0.5, 2.0, 3.7}) {
    const Eigen::MatrixXd scaled = induced_metric(frame.transported(lambda)).entries();
    worst = std::max(worst, relative_max(scaled, lambda * lambda * g));
  }
  return check(worst, tol);
}

TrialOutcome radical(const Signature& sig, std::uint64_t seed, double tol) {
  const ConePoint x = sample_cone_point(sig, seed);
  const AdaptedFrame frame = adapted_frame(x);
  double worst = 0.0;
  for (const auto& z : frame.tangent.vectors()) {
    const double value = std::abs(form_eval(x.vector(), z).real());
    worst = std::max(worst, value / (x.vector().euclidean_norm() * z.euclidean_norm()));
  }
  return check(worst, tol);
}

TrialOutcome signature(const Signature& sig, std::uint64_t seed, double /*tol*/) {
  const ConePoint x = sample_cone_point(sig, seed);
  const MetricSignature got = induced_metric(x, FrameChoice::Adapted).signature();
  const MetricSignature want{2 * sig.p() - 1, 2 * sig.q() - 1, 0};
  const bool ok = got == want;
  return {ok ? 0.0 : 1.0, ok,
          ok ? "" : "signature (" + std::to_string(got.plus) + "," + std::to_string(got.minus) + "," +
                        std::to_string(got.zero) + ")"};
}

TrialOutcome lift_independence(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const ConePoint x = sample_cone_point(sig, seed);
  const TangentFrame frame = adapted_frame(x).quotient();
  std::vector<double> shifts;
  for (int k = 0; k < frame.size(); ++k) shifts.push_back(rng.normal());
  const Eigen::MatrixXd g = induced_metric(frame).entries();
  const Eigen::MatrixXd lifted = induced_metric(frame.shifted(shifts)).entries();
  return check(relative_max(lifted, g), tol);
}

TrialOutcome conformal(const Signature& sig, std::uint64_t seed, double tol) {
  const ConePoint x = sample_cone_point(sig, seed);
  const Split s1 = random_split(sig, derive_seed(seed, 1));
  const Split s2 = random_split(sig, derive_seed(seed, 2));
  const RayRep rep1 = canonicalize_ray(x, s1);
  const RayRep rep2 = canonicalize_ray(rep1.vector(), s2);
  const TangentFrame frame1 = sphere_product_frame(rep1);
  std::vector<CVector> pushed;
  for (const auto& v : frame1.vectors()) pushed.push_back(transfer_tangent(rep1.vector(), v, s2));
  const TangentFrame frame2(rep2.vector(), std::move(pushed), frame1.labels());
  const Eigen::MatrixXd g1 = induced_metric(frame1).entries();
  const Eigen::MatrixXd g2 = induced_metric(frame2).entries();
  const double c = (g1.array() * g2.array()).sum() / g1.squaredNorm();
  if (!(c > 0.0)) return {kInf, false, "conformal factor is not positive"};
  return check((g2 - c * g1).norm() / g2.norm(), tol);
}

TrialOutcome cometric_rank(const Signature& sig, std::uint64_t seed, double /*tol*/) {
  const ConePoint x = sample_cone_point(sig, seed);
  const MetricMatrix g = cotangent_metric_qtilde(x);
  const int want_rank = 2 * sig.n() - 4;
  const bool ok = g.rank() == want_rank && g.radical_basis().size() == 1;
  return {ok ? 0.0 : 1.0, ok,
          ok ? "" : "rank " + std::to_string(g.rank()) + ", radical " + std::to_string(g.radical_basis().size())};
}

TrialOutcome skew(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const ConePoint x = sample_cone_point(sig, seed);
  const CVector& xv = x.vector();
  Eigen::VectorXcd eta_x = xv.coeffs();
  for (int j = sig.p(); j < sig.n(); ++j) eta_x[j] = -eta_x[j];
  const CVector eta_xv(sig, eta_x);
  // Projection onto T_xQ along eta x, using Re f(eta x, x) = |x|^2.
  const auto tangent = [&](const CVector& z) {
    return z - (form_eval(z, xv).real() / xv.euclidean_norm2()) * eta_xv;
  };
  std::vector<CVector> samples{kI * eta_xv};
  for (int k = 0; k < 16; ++k) samples.push_back(tangent(random_vector(sig, rng)));

  double antisymmetry = 0.0;
  double strongest = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const CVector& y = samples[k];
    const CVector& z = samples[(k + 1) % samples.size()];
    antisymmetry = std::max(antisymmetry, std::abs(skew_form(x, y, z) + skew_form(x, z, y)) /
                                              (y.euclidean_norm() * z.euclidean_norm()));
    strongest = std::max(strongest, std::abs(skew_form(x, xv, y)) / (xv.euclidean_norm() * y.euclidean_norm()));
  }
  if (strongest < 0.5) return {strongest, false, "x looks like a radical vector of F_x"};
  return check(antisymmetry, tol);
}

// ---- witt_charts ----------------------------------------------------------------

TrialOutcome kappa_cert(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
  const ConePoint k = kappa0(chart, 3.0 * rng.normal(), random_coords(sig.n() - 2, rng));
  const double isotropy = std::abs(form_eval(k.vector(), k.vector())) / k.vector().euclidean_norm2();
  const double normalization = std::abs(form_eval(chart.x().vector(), k.vector()) - 1.0);
  return check(std::max(isotropy, normalization), tol);
}

TrialOutcome roundtrip(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
  const double r = 3.0 * rng.normal();
  const Eigen::VectorXcd y = random_coords(sig.n() - 2, rng);
  const ChartInverse back = chart_inverse(chart, kappa(chart, r, y).vector());
  if (!std::holds_alternative<ChartPoint>(back)) return {kInf, false, "kappa landed in a_perp"};
  const ChartPoint& point = std::get<ChartPoint>(back);
  double residual = std::max(std::abs(point.r - r), max_abs(point.y_coords - y));

  // The other direction: a generic class is fixed by kappa o chart_inverse.
  const ConePoint b = sample_cone_point(sig, derive_seed(seed, 7));
  const ChartInverse coords = chart_inverse(chart, b);
  if (std::holds_alternative<ChartPoint>(coords)) {
    const ChartPoint& c = std::get<ChartPoint>(coords);
    if (!proj_equivalent(kappa(chart, c.r, c.y_coords).vector(), b, tol)) {
      return {kInf, false, "kappa o chart_inverse moved a class"};
    }
  }
  return check(residual, tol);
}

TrialOutcome chart_target(const Signature& sig, std::uint64_t seed, double /*tol*/) {
  Rng rng(seed, 1);
  const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
  const ConePoint k = kappa0(chart, 3.0 * rng.normal(), random_coords(sig.n() - 2, rng));
  const bool ok = !is_perp(chart.x(), k);
  return {ok ? 0.0 : 1.0, ok, ok ? "" : "kappa0 output lies in a_perp"};
}

TrialOutcome lemma2(const Signature& sig, std::uint64_t seed, double tol) {
  const ConePoint x = sample_cone_point(sig, seed);
  const std::vector<CVector> basis = extend_to_witt_basis(x);
  const double gram = max_abs(gram_matrix(basis) - sig.eta_matrix());
  const double sum = max_abs((basis.front() + basis.back() - x.vector()).coeffs());
  if (sum > 1e-12) return {sum, false, "x != e_1 + e_n"};
  return check(gram, tol);
}

TrialOutcome exactness(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const exact::QChart qchart = exact::QChart::standard(sig);
  std::vector<CVector> mu;
  for (const auto& m : qchart.mu_basis) mu.push_back(m.to_cvector());
  const ChartFrame chart(ConePoint::certify(qchart.x.to_cvector()), qchart.u.to_cvector(), std::move(mu));

  const mpq_class r = random_rational(rng).re();
  std::vector<exact::QGaussian> y;
  Eigen::VectorXcd yf(sig.n() - 2);
  for (int k = 0; k + 2 < sig.n(); ++k) {
    y.push_back(random_rational(rng));
    yf[k] = y.back().to_complex();
  }
  const exact::QVector qk = exact::exact_kappa0(qchart, r, y);
  const ConePoint fk = kappa0(chart, r.get_d(), yf);
  const CVector kq = qk.to_cvector();
  double residual = max_abs(fk.vector().coeffs() - kq.coeffs()) / kq.euclidean_norm();

  // A rational cone point away from the chart center, scaled by a Gaussian rational.
  exact::QGaussian c = random_rational(rng);
  if (c.is_zero()) c = exact::QGaussian(1);
  const exact::QVector b = c * qk;
  int hint_index = 0;
  for (int j = 1; j < sig.n(); ++j)
    if (b[j].norm2() > b[hint_index].norm2()) hint_index = j;
  const exact::QVector hint = exact::QVector::basis(sig, hint_index);
  const exact::QVector qu = exact::exact_hyperbolic_partner(b, &hint);
  const CVector fu = hyperbolic_partner(ConePoint::certify(b.to_cvector()), hint.to_cvector());
  residual = std::max(residual, max_abs(fu.coeffs() - qu.to_cvector().coeffs()) / qu.to_cvector().euclidean_norm());

  exact::QChartPoint qback;
  if (!exact::exact_chart_inverse(qchart, b, qback)) return {kInf, false, "exact chart inverse failed"};
  const ChartInverse fback = chart_inverse(chart, ConePoint::certify(b.to_cvector()));
  if (!std::holds_alternative<ChartPoint>(fback)) return {kInf, false, "floating chart inverse failed"};
  const ChartPoint& point = std::get<ChartPoint>(fback);
  const double scale = 1.0 + std::abs(qback.r.get_d());
  residual = std::max(residual, std::abs(point.r - qback.r.get_d()) / scale);
  for (std::size_t k = 0; k < qback.y_coords.size(); ++k) {
    const Complex want = qback.y_coords[k].to_complex();
    residual = std::max(residual, std::abs(point.y_coords[static_cast<Eigen::Index>(k)] - want) / (1.0 + std::abs(want)));
  }
  return check(residual, tol);
}

TrialOutcome aperp_partition(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
  const bool apex = rng.uniform() < 0.25;
  const ConePoint b = sample_aperp_point(chart, derive_seed(seed, 3), apex);
  const AperpClass cls = aperp_classify(chart, b);
  const bool expect_apex = apex || sig.p() == 1 || sig.q() == 1;
  if ((cls.kind == AperpClass::Kind::Apex) != expect_apex) return {kInf, false, "wrong stratum"};
  if (cls.kind == AperpClass::Kind::Apex) return check(0.0, tol);
  return check(std::max(std::abs(cls.plus_coords.squaredNorm() - 1.0), std::abs(cls.minus_coords.squaredNorm() - 1.0)),
               tol);
}

// ---- oracle_exact -------------------------------------------------------------

TrialOutcome field_axioms(const Signature& /*sig*/, std::uint64_t seed, double /*tol*/) {
  Rng rng(seed, 1);
  const exact::QGaussian a = random_rational(rng);
  const exact::QGaussian b = random_rational(rng);
  const exact::QGaussian c = random_rational(rng);
  bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
            a * b == b * a && a + b == b + a && (a - a).is_zero();
  if (!a.is_zero()) ok = ok && a * (exact::QGaussian(1) / a) == exact::QGaussian(1);
  return {ok ? 0.0 : 1.0, ok, ok ? "" : "field axiom violated"};
}

TrialOutcome twin(const Signature& sig, std::uint64_t seed, double tol) {
  Rng rng(seed, 1);
  std::vector<exact::QGaussian> uc;
  std::vector<exact::QGaussian> vc;
  for (int j = 0; j < sig.n(); ++j) {
    uc.push_back(random_rational(rng));
    vc.push_back(random_rational(rng));
  }
  const exact::QVector u(sig, uc);
  const exact::QVector v(sig, vc);
  const CVector fu = u.to_cvector();
  const CVector fv = v.to_cvector();
  const Complex want = exact::exact_form_eval(u, v).to_complex();
  const double scale = std::max(1e-300, fu.euclidean_norm() * fv.euclidean_norm());
  return check(std::abs(form_eval(fu, fv) - want) / scale, tol);
}

struct SuiteEntry {
  SuiteInfo info;
  TrialFn fn;
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> table{
      {{"hermitian", "pseudoherm_core", "f(v,u) = conj f(u,v)", 1e-12}, hermitian},
      {{"sesquilinear", "pseudoherm_core", "linear in the first slot", 1e-10}, sesquilinear},
      {{"pu_invariance", "pseudoherm_core", "sampled U(p,q) elements preserve f", 1e-9}, pu_invariance},
      {{"orthonormalize", "pseudoherm_core", "pivoted Gram-Schmidt yields Gram = eta", 1e-9}, orthonormalize},
      {{"cone_sampling", "pseudoherm_core", "sampled cone points are isotropic", 1e-10}, cone_sampling},
      {{"cross_section", "cone_quotients", "canonicalize_ray lands in Q_s and is R+-invariant", 1e-9},
       cross_section},
      {{"sphere_chart", "cone_quotients", "x = x+ + x- recovers the Q_s representative", 1e-12}, sphere_chart},
      {{"phase_retraction", "cone_quotients", "phase canonicalization is idempotent and C*-invariant", 1e-9},
       phase_retraction},
      {{"u1_invariance", "cone_quotients", "U(1) preserves Q_s", 1e-9}, u1_invariance},
      {{"lemma1", "tangent_metrics", "g_{lambda x} = lambda^2 g_x", 1e-9}, lemma1},
      {{"radical", "tangent_metrics", "R x is in the radical of f_x", 1e-10}, radical},
      {{"signature", "tangent_metrics", "induced metric has signature (2p-1, 2q-1)", 0.5}, signature},
      {{"lift_independence", "tangent_metrics", "metric independent of the lift", 1e-9}, lift_independence},
      {{"conformal", "tangent_metrics", "metrics from two splits are conformal", 1e-8}, conformal},
      {{"cometric_rank", "tangent_metrics", "cometric on T*Q~ has rank 2n-4, radical 1", 0.5}, cometric_rank},
      {{"skew", "tangent_metrics", "F_x antisymmetric, x not in its radical", 1e-12}, skew},
      {{"kappa_cert", "witt_charts", "kappa0 is isotropic with f(x, .) = 1", 1e-10}, kappa_cert},
      {{"roundtrip", "witt_charts", "chart_inverse o kappa = id and kappa o chart_inverse fixes classes", 1e-9},
       roundtrip},
      {{"chart_target", "witt_charts", "kappa never lands in a_perp", 0.5}, chart_target},
      {{"lemma2", "witt_charts", "Witt basis: Gram = eta, x = e_1 + e_n", 1e-9}, lemma2},
      {{"exactness", "witt_charts", "floating chart maps agree with the exact oracle", 1e-12}, exactness},
      {{"aperp_partition", "witt_charts", "a_perp splits into apex and generic strata", 1e-9}, aperp_partition},
      {{"field_axioms", "oracle_exact", "Q(i) field axioms hold exactly", 0.5}, field_axioms},
      {{"twin", "oracle_exact", "floating form agrees with exact form", 1e-12}, twin},
  };
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& info : suite_catalog())
    if (info.name == name) return &info;
  return nullptr;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RunReport run_suite(std::string_view name, const Signature& sig, std::uint64_t seed, int trials,
                    std::optional<double> tol) {
  const auto& table = entries();
  const auto it = std::find_if(table.begin(), table.end(), [&](const SuiteEntry& e) { return e.info.name == name; });
  if (it == table.end()) throw ConeError(ErrorKind::Domain, "unknown suite '" + std::string(name) + "'");

  RunReport report{std::string(name), sig, seed, 0, 0, 0, 0.0, 0.0, 0.0, std::nullopt};
  report.tolerance = tol.value_or(it->info.default_tol);
  const auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    TrialOutcome outcome;
    try {
      outcome = it->fn(sig, trial_seed, report.tolerance);
    } catch (const ConeError& e) {
      outcome = {kInf, false, e.what()};
    }
    ++report.trials;
    report.worst_residual = std::max(report.worst_residual, outcome.residual);
    if (outcome.pass) {
      ++report.passed;
    } else {
      ++report.failed;
      if (!report.counterexample) {
        report.counterexample = Counterexample{t, trial_seed, outcome.residual, outcome.note};
      }
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace coneq
