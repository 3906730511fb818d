#include "coneq/serialize.hpp"

namespace coneq {

namespace {

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ConeError(ErrorKind::Parse, e.what());
  }
}

}  // namespace

Json to_json(const Signature& sig) { return {{"p", sig.p()}, {"q", sig.q()}}; }

Signature signature_from_json(const Json& j) {
  return guarded([&] { return Signature(j.at("p").get<int>(), j.at("q").get<int>()); });
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array() || j.size() != 2) throw ConeError(ErrorKind::Parse, "complex must be [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
  });
}

Json coords_to_json(const Eigen::VectorXcd& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v[k]));
  return out;
}

Eigen::VectorXcd coords_from_json(const Json& j) {
  if (!j.is_array()) throw ConeError(ErrorKind::Parse, "coordinates must be an array");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v[static_cast<Eigen::Index>(k)] = complex_from_json(j[k]);
  return v;
}

Json to_json(const CVector& v) {
  return {{"signature", to_json(v.signature())}, {"components", coords_to_json(v.coeffs())}};
}

CVector cvector_from_json(const Json& j) {
  return guarded([&] { return CVector(signature_from_json(j.at("signature")), coords_from_json(j.at("components"))); });
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(coords_to_json(m.row(i).transpose()));
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ConeError(ErrorKind::Parse, "matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::VectorXcd row = coords_from_json(j[static_cast<std::size_t>(i)]);
    if (row.size() != cols) throw ConeError(ErrorKind::Parse, "ragged matrix");
    m.row(i) = row.transpose();
  }
  return m;
}

Json to_json(const GroupElement& g) {
  return {{"signature", to_json(g.signature())}, {"matrix", matrix_to_json(g.matrix())}};
}

Json to_json(const RayRep& rep) {
  return {{"vector", to_json(rep.vector().vector())},
          {"split", rep.split().id()},
          {"plus_sphere", coords_to_json(rep.plus_sphere())},
          {"minus_sphere", coords_to_json(rep.minus_sphere())}};
}

Json to_json(const ProjRep& rep) {
  Json out = to_json(rep.ray);
  out["pivot_index"] = rep.pivot_index;
  return out;
}

Json to_json(const MetricMatrix& g) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < g.entries().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < g.entries().cols(); ++j) row.push_back(g.entries()(i, j));
    entries.push_back(std::move(row));
  }
  Json radical = Json::array();
  for (const auto& v : g.radical_basis()) radical.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  const MetricSignature& s = g.signature();
  return {{"entries", std::move(entries)},
          {"labels", g.labels()},
          {"signature", Json::array({s.plus, s.minus, s.zero})},
          {"radical_basis", std::move(radical)}};
}

Json to_json(const ChartFrame& chart) {
  Json mu = Json::array();
  for (const auto& m : chart.mu_basis()) mu.push_back(coords_to_json(m.coeffs()));
  return {{"signature", to_json(chart.signature())},
          {"x", coords_to_json(chart.x().vector().coeffs())},
          {"u", coords_to_json(chart.u().coeffs())},
          {"mu_basis", std::move(mu)}};
}

Json to_json(const AperpClass& cls) {
  if (cls.kind == AperpClass::Kind::Apex) return {{"kind", "Apex"}};
  return {{"kind", "Generic"},
          {"alpha", complex_to_json(cls.alpha)},
          {"plus_coords", coords_to_json(cls.plus_coords)},
          {"minus_coords", coords_to_json(cls.minus_coords)}};
}

Json to_json(const ChartInverse& result) {
  if (std::holds_alternative<InAperp>(result)) return {{"result", "InAperp"}};
  const auto& point = std::get<ChartPoint>(result);
  return {{"result", "ChartPoint"}, {"r", point.r}, {"y", coords_to_json(point.y_coords)}};
}

Json to_json(const RunReport& report) {
  Json out{{"suite", report.suite},
           {"signature", to_json(report.signature)},
           {"seed", report.seed},
           {"trials", report.trials},
           {"passed", report.passed},
           {"failed", report.failed},
           {"worst_residual", report.worst_residual},
           {"tolerance", report.tolerance},
           {"elapsed_seconds", report.elapsed_seconds}};
  if (report.counterexample) {
    const Counterexample& c = *report.counterexample;
    out["counterexample"] = {{"trial", c.trial}, {"seed", c.seed}, {"residual", c.residual}, {"note", c.note}};
  }
  return out;
}

namespace exact {

Json to_json(const QGaussian& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

QGaussian qgaussian_from_json(const Json& j) {
  return guarded([&] {
    return QGaussian(parse_rational(j.at("re").get<std::string>()), parse_rational(j.at("im").get<std::string>()));
  });
}

Json to_json(const QVector& v) {
  Json comps = Json::array();
  for (const auto& c : v.components()) comps.push_back(to_json(c));
  return {{"signature", coneq::to_json(v.signature())}, {"components", std::move(comps)}};
}

QVector qvector_from_json(const Json& j) {
  return guarded([&] {
    std::vector<QGaussian> comps;
    for (const auto& c : j.at("components")) comps.push_back(qgaussian_from_json(c));
    return QVector(signature_from_json(j.at("signature")), std::move(comps));
  });
}

}  // namespace exact

}  // namespace coneq
