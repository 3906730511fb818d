// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "coneq/exact.hpp"
#include "coneq/suites.hpp"
#include "coneq/tangent.hpp"
#include "coneq/witt.hpp"

using namespace coneq;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<Signature> all_signatures() {
  std::vector<Signature> out;
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p < n; ++p) out.emplace_back(p, n - p);
  return out;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double sigma_max(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()[0];
}

// Rank under the singular-value threshold rel * sigma_max, where sigma_max is
// that of `reference` (the form this one is a restriction of) when larger.
int sv_rank(const Eigen::MatrixXd& m, double rel, const Eigen::MatrixXd& reference) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  const double top = std::max(sv[0], sigma_max(reference));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv[i] > rel * top ? 1 : 0;
  return r;
}

template <class F>
void guarded(const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(false, name, std::string("exception: ") + e.what());
  }
}

void sphere_product() {
  double worst_norm = 0.0, worst_idem = 0.0, worst_scale = 0.0;
  for (const auto& sig : all_signatures()) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const std::uint64_t seed = derive_seed(101, i);
      const ConePoint x = sample_cone_point(sig, seed);
      const RayRep rep = canonicalize_ray(x);
      worst_norm = std::max({worst_norm, std::abs(rep.plus_norm() - 1.0), std::abs(rep.minus_norm() - 1.0)});
      const RayRep again = canonicalize_ray(rep.vector());
      worst_idem = std::max(worst_idem, (again.vector().vector().coeffs() - rep.vector().vector().coeffs()).norm());
      Rng rng(seed, 0x1);
      const RayRep scaled = canonicalize_ray(x.scaled(std::exp(3.0 * rng.normal())));
      worst_scale = std::max(worst_scale, (scaled.vector().vector().coeffs() - rep.vector().vector().coeffs()).norm());
    }
  }
  report(std::max({worst_norm, worst_idem, worst_scale}) <= 1e-9, "sphere-product",
         fmt("|x+|,|x-| err %.2e, idempotence %.2e, R+ invariance %.2e (tol 1e-9, 1e3 pts x 15 signatures)",
             worst_norm, worst_idem, worst_scale));
}

void lemma1() {
  double worst = 0.0;
  for (const auto& sig : all_signatures()) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const ConePoint x = sample_cone_point(sig, derive_seed(202, i));
      const TangentFrame frame = adapted_frame(x).quotient();
      const Eigen::MatrixXd g = induced_metric(frame).entries();
      for (double lambda : {0.5, 2.0, 3.7}) {
        const Eigen::MatrixXd gl = induced_metric(frame.transported(lambda)).entries();
        worst = std::max(worst, (gl - lambda * lambda * g).norm() / g.norm());
      }
    }
  }
  report(worst <= 1e-9, "lemma1-scaling", fmt("max |G_lx - l^2 G_x|/|G_x| = %.2e (tol 1e-9, 100 trials x 15 signatures)", worst));
}

void signature_claim() {
  const Signature sigs[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}};
  int total = 0, good = 0;
  for (const auto& sig : sigs) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      const MetricMatrix g = induced_metric(sample_cone_point(sig, derive_seed(303, i)), FrameChoice::Adapted);
      ++total;
      good += g.signature() == MetricSignature{2 * sig.p() - 1, 2 * sig.q() - 1, 0} ? 1 : 0;
    }
  }
  report(good == total, "metric-signature", fmt("%.0f of %.0f trials have signature (2p-1, 2q-1, 0)", good, total));
}

void torus() {
  const Signature s11(1, 1);
  Eigen::MatrixXd diag(2, 2);
  diag << 1, 0, 0, -1;
  double worst_eps = 0.0, worst_shift = 0.0, worst_co = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::uint64_t seed = derive_seed(404, i);
    const ConePoint x = sample_cone_point(s11, seed);
    worst_eps = std::max(worst_eps, max_abs(induced_metric(x, FrameChoice::Epsilon).entries() - diag));
    Rng rng(seed, 0x2);
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const TorusAngles a = torus_coords(x);
    const TorusAngles b = torus_coords(x.scaled(std::polar(1.0, phi)));
    const auto wrap = [](double d) { return std::remainder(d, 2.0 * std::numbers::pi); };
    worst_shift = std::max({worst_shift, std::abs(wrap(b.phi1 - a.phi1 - phi)), std::abs(wrap(b.phi2 - a.phi2 - phi))});
    const MetricMatrix co = cotangent_metric_qtilde(x);
    worst_co = co.entries().rows() == 1 ? std::max(worst_co, max_abs(co.entries())) : 1.0;
  }
  report(worst_eps <= 1e-12 && worst_shift <= 1e-9 && worst_co <= 1e-10, "torus-(1,1)",
         fmt("epsilon metric err %.2e (1e-12), U(1) shift err %.2e (1e-9), cometric max %.2e (1e-10)", worst_eps,
             worst_shift, worst_co));
}

void lemma2() {
  double worst_gram = 0.0, worst_sum = 0.0;
  for (const auto& sig : all_signatures()) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const ConePoint x = sample_cone_point(sig, derive_seed(505, i));
      const auto basis = extend_to_witt_basis(x);
      worst_gram = std::max(worst_gram, (gram_matrix(basis) - sig.eta_matrix()).cwiseAbs().maxCoeff());
      worst_sum = std::max(worst_sum, (basis.front() + basis.back() - x.vector()).coeffs().cwiseAbs().maxCoeff());
    }
  }
  report(worst_gram <= 1e-9 && worst_sum <= 1e-12, "lemma2-witt-basis",
         fmt("Gram - eta %.2e (1e-9), x - (e1+en) %.2e (1e-12), 1e3 pts x 15 signatures", worst_gram, worst_sum));
}

void kappa_chart() {
  const auto sigs = all_signatures();
  double worst_iso = 0.0, worst_norm = 0.0, worst_rt = 0.0;
  int unexpected_perp = 0;
  for (int i = 0; i < 10000; ++i) {
    const Signature& sig = sigs[static_cast<std::size_t>(i) % sigs.size()];
    const std::uint64_t seed = derive_seed(606, static_cast<std::uint64_t>(i));
    Rng rng(seed, 0x3);
    const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
    const double r = 2.0 * rng.normal();
    Eigen::VectorXcd y(sig.n() - 2);
    for (Eigen::Index k = 0; k < y.size(); ++k) y[k] = rng.complex_normal();
    const ConePoint k0 = kappa0(chart, r, y);
    // Relative to |kappa0|^2 for isotropy; f(x, kappa0) is normalized to 1.
    const double scale = k0.vector().euclidean_norm();
    worst_iso = std::max(worst_iso, std::abs(form_eval(k0.vector(), k0.vector())) / (scale * scale));
    worst_norm = std::max(worst_norm, std::abs(form_eval(chart.x().vector(), k0.vector()) - 1.0));
    const ChartInverse back = chart_inverse(chart, kappa(chart, r, y).vector());
    if (!std::holds_alternative<ChartPoint>(back)) {
      ++unexpected_perp;
      continue;
    }
    const ChartPoint& pt = std::get<ChartPoint>(back);
    const double denom = std::max(1.0, std::abs(r) + y.norm());
    double err = std::abs(pt.r - r);
    if (y.size() > 0) err = std::max(err, (pt.y_coords - y).cwiseAbs().maxCoeff());
    worst_rt = std::max(worst_rt, err / denom);
  }

  int exact_ok = 0;
  const Signature exact_sigs[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 2}};
  Rng rng(707);
  const auto draw = [&rng] {
    mpq_class q(static_cast<long>(rng.uniform() * 19.0) - 9, 1 + static_cast<long>(rng.uniform() * 6.0));
    q.canonicalize();
    return q;
  };
  for (int i = 0; i < 1000; ++i) {
    const Signature& sig = exact_sigs[i % 7];
    std::vector<exact::QGaussian> y;
    for (int k = 0; k < sig.n() - 2; ++k) y.emplace_back(draw(), draw());
    exact_ok += exact::exact_kappa_roundtrip(exact::QChart::standard(sig), draw(), y) ? 1 : 0;
  }

  // Certificates are stated in absolute terms; the isotropy residual above is
  // relative to |kappa0|^2, which only makes it stricter for |kappa0| >= 1.
  report(worst_iso <= 1e-10 && worst_norm <= 1e-10, "kappa-certificates",
         fmt("|f(k,k)|/|k|^2 %.2e, |f(x,k)-1| %.2e (tol 1e-10, 1e4 inputs)", worst_iso, worst_norm));
  report(worst_rt <= 1e-9 && unexpected_perp == 0, "kappa-roundtrip",
         fmt("chart_inverse o kappa err %.2e (tol 1e-9), %.0f inputs misread as a_perp", worst_rt, unexpected_perp));
  report(exact_ok == 1000, "kappa-exact-roundtrip", fmt("%.0f of 1000 rational inputs recovered exactly", exact_ok));
}

void cometric() {
  std::string detail;
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    int bad = 0;
    for (int p = 1; p < n; ++p) {
      const Signature sig(p, n - p);
      for (std::uint64_t i = 0; i < 100; ++i) {
        const ConePoint x = sample_cone_point(sig, derive_seed(808, i));
        const MetricMatrix g = cotangent_metric_qtilde(x);
        const Eigen::MatrixXd full = induced_metric(x, FrameChoice::Adapted).entries().inverse();
        const int dim = static_cast<int>(g.entries().rows());
        const int rank = sv_rank(g.entries(), 1e-9, full);
        const int want = n == 2 ? 0 : 2 * n - 4;
        const bool good = dim == 2 * n - 3 && rank == want && (n == 2 || dim - rank == 1);
        bad += good ? 0 : 1;
      }
    }
    ok = ok && bad == 0;
    detail += "n=" + std::to_string(n) + ":" + (bad == 0 ? "ok " : std::to_string(bad) + " bad ");
  }
  report(ok, "cometric-rank", detail + "(rank 2n-4, radical 1; n=2 rank 0; threshold 1e-9 sigma_max of the cometric on T*Q')");
}

void conformal() {
  double worst = 0.0;
  int nonpositive = 0;
  for (const auto& sig : all_signatures()) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::uint64_t seed = derive_seed(909, i);
      const Split s1 = Split::transported(sample_pseudo_unitary(sig, derive_seed(seed, 1)));
      const Split s2 = Split::transported(sample_pseudo_unitary(sig, derive_seed(seed, 2)));
      const RayRep rep1 = canonicalize_ray(sample_cone_point(sig, seed), s1);
      const RayRep rep2 = canonicalize_ray(rep1.vector(), s2);
      const TangentFrame frame1 = sphere_product_frame(rep1);
      std::vector<CVector> pushed;
      for (const auto& v : frame1.vectors()) pushed.push_back(transfer_tangent(rep1.vector(), v, s2));
      const Eigen::MatrixXd g1 = induced_metric(frame1).entries();
      const Eigen::MatrixXd g2 = induced_metric(TangentFrame(rep2.vector(), pushed, frame1.labels())).entries();
      const double c = (g1.array() * g2.array()).sum() / g1.squaredNorm();
      if (!(c > 0.0)) ++nonpositive;
      worst = std::max(worst, (g2 - c * g1).norm() / g2.norm());
    }
  }
  report(worst <= 1e-8 && nonpositive == 0, "conformal-splits",
         fmt("relative residual %.2e (tol 1e-8), %.0f non-positive factors, 100 trials x 15 signatures", worst,
             nonpositive));
}

void proposition1() {
  const auto sigs = all_signatures();
  double worst = 0.0;
  int apex = 0, generic = 0, misfiled = 0;
  for (int i = 0; i < 1000; ++i) {
    const Signature& sig = sigs[static_cast<std::size_t>(i) % sigs.size()];
    const std::uint64_t seed = derive_seed(111, static_cast<std::uint64_t>(i));
    const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
    const bool want_apex = i % 4 == 0 || sig.p() == 1 || sig.q() == 1;
    const AperpClass cls = aperp_classify(chart, sample_aperp_point(chart, seed, i % 4 == 0));
    const bool is_apex = cls.kind == AperpClass::Kind::Apex;
    misfiled += is_apex == want_apex ? 0 : 1;
    if (is_apex) {
      ++apex;
      continue;
    }
    ++generic;
    // Unit spheres in C^{p-1}, C^{q-1} and a real positive pivot.
    worst = std::max({worst, std::abs(cls.plus_coords.norm() - 1.0), std::abs(cls.minus_coords.norm() - 1.0)});
    Eigen::VectorXcd mid(cls.plus_coords.size() + cls.minus_coords.size());
    mid << cls.plus_coords, cls.minus_coords;
    const PhaseGauge g = pivot_phase_gauge(mid);
    worst = std::max(worst, std::abs(mid[g.pivot_index].imag()));
  }
  report(misfiled == 0 && worst <= 1e-9, "aperp-partition",
         fmt("%.0f apex, %.0f generic, normalization residual %.2e (tol 1e-9)", apex, generic, worst) +
             (misfiled ? " misfiled " + std::to_string(misfiled) : ""));

  const int d22 = aperp_dimension_estimate(make_chart(sample_cone_point(Signature(2, 2), 3)), 3);
  const int d33 = aperp_dimension_estimate(make_chart(sample_cone_point(Signature(3, 3), 3)), 3);
  report(d22 == 3 && d33 == 7, "aperp-dimension",
         fmt("(2,2): %.0f (want 3), (3,3): %.0f (want 7), i.e. 2n-5", d22, d33));
}

}  // namespace

int main() {
  guarded("sphere-product", sphere_product);
  guarded("lemma1-scaling", lemma1);
  guarded("metric-signature", signature_claim);
  guarded("torus-(1,1)", torus);
  guarded("lemma2-witt-basis", lemma2);
  guarded("kappa-chart", kappa_chart);
  guarded("cometric-rank", cometric);
  guarded("conformal-splits", conformal);
  guarded("aperp", proposition1);
  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures);
  return failures == 0 ? 0 : 1;
}
