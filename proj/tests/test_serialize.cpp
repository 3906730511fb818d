#include <doctest.h>

#include "coneq/serialize.hpp"

using namespace coneq;

TEST_CASE("vector encoding shape") {
  const Signature s11(1, 1);
  Eigen::VectorXcd c(2);
  c << Complex(1, 0), Complex(0, 1);
  const Json j = to_json(CVector(s11, c));
  CHECK(j["signature"]["p"] == 1);
  CHECK(j["signature"]["q"] == 1);
  CHECK(j["components"].size() == 2);
  CHECK(j["components"][1][1] == 1.0);
  const CVector back = cvector_from_json(Json::parse(j.dump()));
  CHECK((back.coeffs() - c).norm() == 0.0);
}

TEST_CASE("vector round trip is exact") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ConePoint x = sample_cone_point(Signature(2, 3), seed);
    const CVector back = cvector_from_json(Json::parse(to_json(x.vector()).dump()));
    CHECK(back.signature() == x.signature());
    CHECK((back.coeffs() - x.vector().coeffs()).norm() == 0.0);
  }
}

TEST_CASE("exact vector round trip") {
  const Signature s22(2, 2);
  const exact::QVector v(s22, {exact::QGaussian(mpq_class(1, 3), mpq_class(-2, 7)), exact::QGaussian(5),
                               exact::QGaussian(0, 1), exact::QGaussian(mpq_class(-9, 4))});
  const Json j = exact::to_json(v);
  CHECK(j["components"][0]["re"] == "1/3");
  CHECK(j["components"][0]["im"] == "-2/7");
  CHECK(exact::qvector_from_json(Json::parse(j.dump())) == v);
}

TEST_CASE("chart inverse and a_perp encodings") {
  const Signature s22(2, 2);
  Eigen::VectorXcd c(4);
  c << 1, 0, 0, 1;
  const ConePoint x = ConePoint::certify(CVector(s22, c));
  const ChartFrame chart = make_chart(x);
  CHECK(to_json(chart_inverse(chart, x))["result"] == "InAperp");
  Eigen::VectorXcd y(2);
  y << 1, 0;
  const Json pt = to_json(chart_inverse(chart, kappa0(chart, 2.0, y)));
  CHECK(pt["result"] == "ChartPoint");
  CHECK(pt["r"].get<double>() == doctest::Approx(2.0));
  CHECK(to_json(aperp_classify(chart, x))["kind"] == "Apex");
  const Json frame = to_json(chart);
  CHECK(frame["mu_basis"].size() == 2);
}

TEST_CASE("metric encoding") {
  const MetricMatrix g = induced_metric(sample_cone_point(Signature(1, 1), 0), FrameChoice::Epsilon);
  const Json j = to_json(g);
  CHECK(j["signature"] == Json::array({1, 1, 0}));
  CHECK(j["labels"].size() == 2);
  CHECK(j["entries"].size() == 2);
}

TEST_CASE("malformed input raises parse errors") {
  try {
    (void)cvector_from_json(Json::parse(R"({"signature":{"p":1,"q":1},"components":[[1,0]]})"));
    FAIL("expected an error");
  } catch (const ConeError& e) {
    CHECK((e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::SignatureMismatch));
  }
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"("x")")), ConeError);
  CHECK_THROWS_AS(exact::qgaussian_from_json(Json::parse(R"({"re":"1/0","im":"0"})")), ConeError);
}

TEST_CASE("run report encoding") {
  const RunReport r = run_suite("hermitian", Signature(1, 1), 1, 5);
  const Json j = to_json(r);
  CHECK(j["suite"] == "hermitian");
  CHECK(j["trials"] == 5);
  CHECK(j["passed"] == 5);
  CHECK(!j.contains("counterexample"));
}
