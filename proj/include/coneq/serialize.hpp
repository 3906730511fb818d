#pragma once

// JSON encodings. Complex numbers are [re, im] pairs, vectors carry a
// {"p","q"} signature header, exact rationals are "num/den" strings.

#include <json.hpp>

#include "coneq/exact.hpp"
#include "coneq/pseudoherm.hpp"
#include "coneq/quotients.hpp"
#include "coneq/suites.hpp"
#include "coneq/tangent.hpp"
#include "coneq/witt.hpp"

namespace coneq {

using Json = nlohmann::json;

Json to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Bare array of [re, im] pairs.
Json coords_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd coords_from_json(const Json& j);

Json to_json(const CVector& v);
CVector cvector_from_json(const Json& j);

/// Row-major array of rows of [re, im] pairs.
Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

Json to_json(const GroupElement& g);
Json to_json(const RayRep& rep);
Json to_json(const ProjRep& rep);
Json to_json(const MetricMatrix& g);
Json to_json(const ChartFrame& chart);
Json to_json(const AperpClass& cls);
Json to_json(const ChartInverse& result);
Json to_json(const RunReport& report);

namespace exact {
Json to_json(const QGaussian& z);
QGaussian qgaussian_from_json(const Json& j);
Json to_json(const QVector& v);
QVector qvector_from_json(const Json& j);
}  // namespace exact

}  // namespace coneq
