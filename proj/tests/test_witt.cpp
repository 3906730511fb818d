#include <doctest.h>

#include <cmath>

#include "coneq/exact.hpp"
#include "coneq/witt.hpp"

using namespace coneq;

namespace {

const Complex I{0.0, 1.0};
const Signature kSignatures[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}};

CVector vec(const Signature& sig, std::initializer_list<Complex> c) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index k = 0;
  for (auto z : c) v[k++] = z;
  return CVector(sig, v);
}

double dist(const CVector& a, const CVector& b) { return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff(); }

Eigen::VectorXcd random_coords(Rng& rng, int dim) {
  Eigen::VectorXcd y(dim);
  for (int k = 0; k < dim; ++k) y[k] = rng.complex_normal();
  return y;
}

}  // namespace

TEST_CASE("hyperbolic partner examples") {
  const Signature s22(2, 2);
  const ConePoint x = ConePoint::certify(vec(s22, {1, 0, 0, 1}));
  const CVector u = hyperbolic_partner(x, CVector::basis(s22, 0));
  CHECK(dist(u, vec(s22, {0.5, 0, 0, -0.5})) <= 1e-15);

  const Signature s11(1, 1);
  const ConePoint y = ConePoint::certify(vec(s11, {1, I}));
  const CVector v = hyperbolic_partner(y);
  CHECK(dist(v, vec(s11, {0.5, -0.5 * I})) <= 1e-15);

  // The exact twin gives the same partner.
  const exact::QVector qy(s11, {exact::QGaussian(1), exact::QGaussian(0, 1)});
  const exact::QVector qv = exact::exact_hyperbolic_partner(qy);
  CHECK(qv == exact::QVector(s11, {exact::QGaussian(mpq_class(1, 2)), exact::QGaussian(0, mpq_class(-1, 2))}));

  // A hint with f(hint, x) = 2 is normalized first.
  CHECK(dist(hyperbolic_partner(x, vec(s22, {1, 0, 0, -1})), vec(s22, {0.5, 0, 0, -0.5})) <= 1e-15);
  try {
    (void)hyperbolic_partner(x, CVector::basis(s22, 1));
    FAIL("expected domain error");
  } catch (const ConeError& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("hyperbolic partner property") {
  for (const auto& sig : kSignatures) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const ConePoint x = sample_cone_point(sig, seed);
      const CVector u = hyperbolic_partner(x);
      const double scale = u.euclidean_norm() * u.euclidean_norm();
      CHECK(std::abs(form_eval(u, u)) <= 1e-9 * scale);
      CHECK(std::abs(form_eval(u, x.vector()) - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("Witt basis examples") {
  const Signature s11(1, 1);
  const auto basis = extend_to_witt_basis(ConePoint::certify(vec(s11, {1, I})));
  REQUIRE(basis.size() == 2);
  CHECK(dist(basis[0], vec(s11, {1, 0})) <= 1e-15);
  CHECK(dist(basis[1], vec(s11, {0, I})) <= 1e-15);

  const Signature s22(2, 2);
  const auto b22 = extend_to_witt_basis(ConePoint::certify(vec(s22, {1, 0, 0, 1})));
  REQUIRE(b22.size() == 4);
  for (int j = 0; j < 4; ++j) CHECK(dist(b22[static_cast<std::size_t>(j)], CVector::basis(s22, j)) <= 1e-15);
}

TEST_CASE("Witt basis property up to n = 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int p = 1; p < n; ++p) {
      const Signature sig(p, n - p);
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ConePoint x = sample_cone_point(sig, seed);
        const auto basis = extend_to_witt_basis(x);
        REQUIRE(static_cast<int>(basis.size()) == n);
        const double scale = std::max(1.0, x.vector().euclidean_norm() * x.vector().euclidean_norm());
        CHECK((gram_matrix(basis) - sig.eta_matrix()).cwiseAbs().maxCoeff() <= 1e-9 * scale);
        CHECK(dist(basis.front() + basis.back(), x.vector()) <= 1e-12 * x.vector().euclidean_norm());
      }
    }
  }
}

TEST_CASE("chart frames") {
  const ChartFrame c11 = make_chart(ConePoint::certify(vec(Signature(1, 1), {1, 1})));
  CHECK(c11.mu_basis().empty());
  CHECK(c11.mu_inertia().plus == 0);
  CHECK(c11.mu_inertia().minus == 0);

  const ChartFrame c13 = make_chart(sample_cone_point(Signature(1, 3), 5));
  CHECK(c13.mu_inertia().plus == 0);
  CHECK(c13.mu_inertia().minus == 2);

  const Signature s22(2, 2);
  const ConePoint x = ConePoint::certify(vec(s22, {1, 0, 0, 1}));
  CHECK_THROWS_AS(ChartFrame(x, vec(s22, {1, 0, 0, 0}), {CVector::basis(s22, 1), CVector::basis(s22, 2)}),
                  ConeError);
}

TEST_CASE("kappa0 examples") {
  const Signature s11(1, 1);
  const ChartFrame c11 = make_chart(ConePoint::certify(vec(s11, {1, 1})));
  for (double r : {-2.0, 0.0, 0.25, 3.0}) {
    const ConePoint k = kappa0(c11, r, Eigen::VectorXcd(0));
    CHECK(dist(k.vector(), vec(s11, {0.5 + r * I, -0.5 + r * I})) <= 1e-15);
  }

  const Signature s22(2, 2);
  const ChartFrame c22 = make_chart(ConePoint::certify(vec(s22, {1, 0, 0, 1})));
  Eigen::VectorXcd y(2);
  y << 1, 1;
  const ConePoint k = kappa0(c22, 0.0, y);
  CHECK(dist(k.vector(), vec(s22, {0.5, 1, 1, -0.5})) <= 1e-15);
}

TEST_CASE("kappa certificates and round trip") {
  for (const auto& sig : kSignatures) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      Rng rng(seed, 0x77);
      const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
      const double r = 4.0 * rng.normal();
      const Eigen::VectorXcd y = random_coords(rng, sig.n() - 2);
      const ConePoint k = kappa0(chart, r, y);
      const double scale = k.vector().euclidean_norm();
      CHECK(std::abs(form_eval(k.vector(), k.vector())) <= 1e-10 * scale * scale);
      CHECK(std::abs(form_eval(chart.x().vector(), k.vector()) - 1.0) <= 1e-10);

      // Round trip from an arbitrary representative of the class.
      const ProjRep rep = kappa(chart, r, y);
      const ChartInverse back = chart_inverse(chart, rep.vector());
      REQUIRE(std::holds_alternative<ChartPoint>(back));
      const ChartPoint& pt = std::get<ChartPoint>(back);
      const double tol = 1e-9 * std::max(1.0, std::abs(r) + y.squaredNorm());
      CHECK(std::abs(pt.r - r) <= tol);
      if (y.size() > 0) CHECK((pt.y_coords - y).cwiseAbs().maxCoeff() <= tol);
    }
  }
}

TEST_CASE("chart inverse examples") {
  const Signature s22(2, 2);
  const ConePoint x = ConePoint::certify(vec(s22, {1, 0, 0, 1}));
  const ChartFrame chart = make_chart(x);
  Eigen::VectorXcd y(2);
  y << 1, 0;
  const ConePoint k = kappa0(chart, 2.0, y);
  // b / f(b,x) = y + u + beta x with beta = -1/2 + 2i.
  CHECK(dist(k.vector(), CVector::basis(s22, 1) + chart.u() + Complex(-0.5, 2.0) * x.vector()) <= 1e-15);
  const ChartInverse inv = chart_inverse(chart, ConePoint::certify((3.0 - I) * k.vector()));
  REQUIRE(std::holds_alternative<ChartPoint>(inv));
  CHECK(std::get<ChartPoint>(inv).r == doctest::Approx(2.0));
  CHECK((std::get<ChartPoint>(inv).y_coords - y).norm() <= 1e-14);

  CHECK(std::holds_alternative<InAperp>(chart_inverse(chart, x)));
  const ConePoint b = ConePoint::certify(vec(s22, {5, 1, 1, 5}));
  CHECK(std::holds_alternative<InAperp>(chart_inverse(chart, b)));
  CHECK(is_perp(x, b));
  CHECK(!is_perp(x, k));
}

TEST_CASE("kappa is injective on sampled pairs") {
  const Signature sig(2, 3);
  const ChartFrame chart = make_chart(sample_cone_point(sig, 11));
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const double r1 = rng.normal();
    const double r2 = rng.normal();
    const Eigen::VectorXcd y1 = random_coords(rng, 3);
    const Eigen::VectorXcd y2 = random_coords(rng, 3);
    CHECK(!proj_equivalent(kappa0(chart, r1, y1), kappa0(chart, r2, y2)));
    CHECK(proj_equivalent(kappa0(chart, r1, y1), kappa(chart, r1, y1).vector()));
  }
}

TEST_CASE("chart target and perpendicularity are class functions") {
  for (const auto& sig : kSignatures) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
      const ConePoint b = sample_cone_point(sig, seed + 1000);
      Rng rng(seed, 0x5);
      const ConePoint cb = b.scaled(rng.nonzero_scalar());
      const ConePoint cx = chart.x().scaled(rng.nonzero_scalar());
      CHECK(is_perp(chart.x(), b) == is_perp(cx, cb));
      // Every kappa image avoids a_perp.
      const ConePoint k = kappa0(chart, rng.normal(), random_coords(rng, sig.n() - 2));
      CHECK(!is_perp(chart.x(), k));
      const ConePoint ap = sample_aperp_point(chart, seed, seed % 3 == 0);
      CHECK(is_perp(chart.x(), ap));
      CHECK(std::holds_alternative<InAperp>(chart_inverse(chart, ap)));
    }
  }
}

TEST_CASE("a_perp classification") {
  const Signature s22(2, 2);
  const ConePoint x = ConePoint::certify(vec(s22, {1, 0, 0, 1}));
  const ChartFrame chart = make_chart(x);
  CHECK(aperp_classify(chart, x).kind == AperpClass::Kind::Apex);
  CHECK(aperp_classify(chart, x.scaled(2.0 - 3.0 * I)).kind == AperpClass::Kind::Apex);

  const AperpClass g = aperp_classify(chart, ConePoint::certify(vec(s22, {5, 1, 1, 5})));
  REQUIRE(g.kind == AperpClass::Kind::Generic);
  CHECK(std::abs(g.alpha - 5.0) <= 1e-12);
  REQUIRE(g.plus_coords.size() == 1);
  REQUIRE(g.minus_coords.size() == 1);
  CHECK(std::abs(g.plus_coords[0] - 1.0) <= 1e-12);
  CHECK(std::abs(g.minus_coords[0] - 1.0) <= 1e-12);

  try {
    (void)aperp_classify(chart, ConePoint::certify(vec(s22, {1, 0, 0, -1})));
    FAIL("expected domain error");
  } catch (const ConeError& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }

  for (int q = 1; q <= 4; ++q) {
    const Signature sig(1, q);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const ChartFrame c = make_chart(sample_cone_point(sig, seed));
      CHECK(aperp_classify(c, sample_aperp_point(c, seed, false)).kind == AperpClass::Kind::Apex);
    }
  }
}

TEST_CASE("a_perp classification is a class invariant") {
  for (const auto& sig : {Signature(2, 2), Signature(2, 3), Signature(3, 3)}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const ChartFrame chart = make_chart(sample_cone_point(sig, seed));
      const ConePoint b = sample_aperp_point(chart, seed, false);
      const AperpClass c1 = aperp_classify(chart, b);
      REQUIRE(c1.kind == AperpClass::Kind::Generic);
      CHECK(c1.plus_coords.norm() == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(c1.minus_coords.norm() == doctest::Approx(1.0).epsilon(1e-9));
      Rng rng(seed, 0x99);
      const AperpClass c2 = aperp_classify(chart, b.scaled(rng.nonzero_scalar()));
      CHECK(std::abs(c1.alpha - c2.alpha) <= 1e-9 * std::max(1.0, std::abs(c1.alpha)));
      CHECK((c1.plus_coords - c2.plus_coords).norm() <= 1e-9);
      CHECK((c1.minus_coords - c2.minus_coords).norm() <= 1e-9);
    }
  }
}

TEST_CASE("a_perp generic stratum dimension") {
  const ChartFrame c22 = make_chart(sample_cone_point(Signature(2, 2), 1));
  const ChartFrame c33 = make_chart(sample_cone_point(Signature(3, 3), 1));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (double step : {1e-4, 1e-5, 1e-6}) {
      CHECK(aperp_dimension_estimate(c22, seed, step) == 3);
      CHECK(aperp_dimension_estimate(c33, seed, step) == 7);
    }
  }
  CHECK(aperp_dimension_estimate(make_chart(sample_cone_point(Signature(2, 3), 2)), 0) == 5);
  try {
    (void)aperp_dimension_estimate(make_chart(sample_cone_point(Signature(1, 3), 0)), 0);
    FAIL("expected unsupported");
  } catch (const ConeError& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}
