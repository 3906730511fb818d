// coneq: sampling, verification suites, charts and metric reports on the
// projective quadric of a pseudo-Hermitian space.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coneq/serialize.hpp"

using namespace coneq;

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct Common {
  std::string sig = "2,2";
  std::uint64_t seed = 0;
  int trials = -1;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
};

struct Coords {
  std::string x;
  std::string b;
  std::string y;
  double r = 0.0;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Signature parse_signature(const std::string& text) {
  int p = 0, q = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> p >> comma >> q) || comma != ',' || !in.eof()) throw UsageError("--sig expects p,q");
  if (p < 1 || q < 1) throw UsageError("--sig needs p >= 1 and q >= 1");
  return {p, q};
}

std::vector<double> parse_reals(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  return out;
}

// Re/im interleaved list of `count` complex numbers.
Eigen::VectorXcd parse_complex(const std::string& text, int count, const char* flag) {
  const std::vector<double> v = parse_reals(text, flag);
  if (static_cast<int>(v.size()) != 2 * count) {
    throw UsageError(std::string(flag) + " expects " + std::to_string(2 * count) + " reals (re,im interleaved)");
  }
  Eigen::VectorXcd out(count);
  for (int k = 0; k < count; ++k) out[k] = Complex(v[2 * k], v[2 * k + 1]);
  return out;
}

ConePoint parse_point(const std::string& text, const Signature& sig, const char* flag) {
  return ConePoint::certify(CVector(sig, parse_complex(text, sig.n(), flag)));
}

// Chart center: --x if given, else e_1 + e_n.
ConePoint chart_center(const Coords& c, const Signature& sig) {
  if (!c.x.empty()) return parse_point(c.x, sig, "--x");
  return ConePoint::certify(CVector::basis(sig, 0) + CVector::basis(sig, sig.n() - 1));
}

void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(common.out);
  if (!file) throw UsageError("cannot open " + common.out);
  file << text;
}

void emit_json(const Common& common, const Json& doc) { emit(common, doc.dump(2) + "\n"); }

int trials_or(const Common& c, int fallback) {
  if (c.trials == -1) return fallback;
  if (c.trials < 1) throw UsageError("--trials must be positive");
  return c.trials;
}

void require_json(const Common& c) {
  if (c.format != "json") throw UsageError("csv output is only available for the torus command");
}

int cmd_sample(const Common& c) {
  require_json(c);
  const Signature sig = parse_signature(c.sig);
  const int trials = trials_or(c, 10);
  Json points = Json::array();
  for (int i = 0; i < trials; ++i) {
    const ConePoint x = sample_cone_point(sig, derive_seed(c.seed, static_cast<std::uint64_t>(i)));
    points.push_back({{"vector", to_json(x.vector())},
                      {"ray", to_json(canonicalize_ray(x))},
                      {"proj", to_json(canonicalize_phase(x))}});
  }
  emit_json(c, {{"signature", to_json(sig)}, {"seed", c.seed}, {"points", points}});
  std::cerr << "sampled " << trials << " cone points\n";
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite) {
  require_json(c);
  const Signature sig = parse_signature(c.sig);
  const int trials = trials_or(c, 100);
  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& info : suite_catalog()) names.push_back(info.name);
  } else {
    if (find_suite(suite) == nullptr) throw UsageError("unknown suite '" + suite + "'");
    names.push_back(suite);
  }
  Json reports = Json::array();
  bool ok = true;
  for (const auto& name : names) {
    const RunReport r = run_suite(name, sig, c.seed, trials, c.tol);
    reports.push_back(to_json(r));
    ok = ok && r.ok();
    std::fprintf(stderr, "%-18s %s  %d/%d passed, worst %.3e (tol %.1e)\n", name.c_str(), r.ok() ? "PASS" : "FAIL",
                 r.passed, r.trials, r.worst_residual, r.tolerance);
    if (r.counterexample) {
      std::fprintf(stderr, "  counterexample: trial %d seed %llu residual %.3e %s\n", r.counterexample->trial,
                   static_cast<unsigned long long>(r.counterexample->seed), r.counterexample->residual,
                   r.counterexample->note.c_str());
    }
  }
  Json doc = {{"ok", ok}, {"reports", reports}};
  if (names.size() == 1) doc = reports[0];
  emit_json(c, doc);
  return ok ? 0 : kFailed;
}

int cmd_chart(const Common& c, const Coords& coords, bool forward) {
  require_json(c);
  const Signature sig = parse_signature(c.sig);
  const ChartFrame chart = make_chart(chart_center(coords, sig));
  if (forward) {
    const Eigen::VectorXcd y =
        coords.y.empty() ? Eigen::VectorXcd::Zero(sig.n() - 2) : parse_complex(coords.y, sig.n() - 2, "--y");
    const ConePoint k0 = kappa0(chart, coords.r, y);
    emit_json(c, {{"chart", to_json(chart)}, {"kappa0", to_json(k0.vector())}, {"class", to_json(kappa(chart, coords.r, y))}});
    std::cerr << "kappa(" << coords.r << ", y) computed\n";
    return 0;
  }
  if (coords.b.empty()) throw UsageError("chart inverse needs --b");
  const ChartInverse inv = chart_inverse(chart, parse_point(coords.b, sig, "--b"));
  emit_json(c, to_json(inv));
  std::cerr << (std::holds_alternative<InAperp>(inv) ? "point lies in a_perp\n" : "chart coordinates recovered\n");
  return 0;
}

ConePoint point_or_sample(const Coords& coords, const Signature& sig, std::uint64_t seed) {
  return coords.x.empty() ? sample_cone_point(sig, seed) : parse_point(coords.x, sig, "--x");
}

int cmd_metric(const Common& c, const Coords& coords, const std::string& frame) {
  require_json(c);
  const Signature sig = parse_signature(c.sig);
  const ConePoint x = point_or_sample(coords, sig, c.seed);
  const MetricMatrix g = induced_metric(x, frame == "epsilon" ? FrameChoice::Epsilon : FrameChoice::Adapted);
  emit_json(c, {{"point", to_json(x.vector())}, {"frame", frame}, {"metric", to_json(g)}});
  std::cerr << "signature (" << g.signature().plus << "," << g.signature().minus << "," << g.signature().zero << ")\n";
  return 0;
}

int cmd_cometric(const Common& c, const Coords& coords) {
  require_json(c);
  const Signature sig = parse_signature(c.sig);
  const ConePoint x = point_or_sample(coords, sig, c.seed);
  const MetricMatrix g = cotangent_metric_qtilde(x);
  emit_json(c, {{"point", to_json(x.vector())}, {"cometric", to_json(g)}, {"rank", g.rank()}});
  std::cerr << "rank " << g.rank() << ", radical " << g.radical_basis().size() << "\n";
  return 0;
}

int cmd_aperp(const Common& c, const Coords& coords, bool classify, double step) {
  require_json(c);
  const Signature sig = parse_signature(c.sig);
  const ChartFrame chart = make_chart(chart_center(coords, sig));
  if (classify) {
    const ConePoint b = coords.b.empty() ? sample_aperp_point(chart, c.seed, false) : parse_point(coords.b, sig, "--b");
    const AperpClass cls = aperp_classify(chart, b);
    emit_json(c, {{"point", to_json(b.vector())}, {"class", to_json(cls)}});
    std::cerr << (cls.kind == AperpClass::Kind::Apex ? "apex\n" : "generic\n");
    return 0;
  }
  const int d = aperp_dimension_estimate(chart, c.seed, step);
  emit_json(c, {{"signature", to_json(sig)}, {"dimension", d}, {"expected", 2 * sig.n() - 5}});
  std::cerr << "generic stratum dimension " << d << "\n";
  return d == 2 * sig.n() - 5 ? 0 : kFailed;
}

// Fiber orbits of U(1) on the (1,1) torus, and the two null directions of
// the epsilon-frame metric at each base point.
int cmd_torus(const Common& c, int steps) {
  const Signature sig = parse_signature(c.sig);
  if (!(sig == Signature(1, 1))) throw UsageError("torus data exists only for --sig 1,1");
  if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
  const int orbits = trials_or(c, 8);
  struct Row {
    std::string kind;
    int id;
    double t, phi1, phi2, dphi1, dphi2;
  };
  std::vector<Row> rows;
  for (int i = 0; i < orbits; ++i) {
    const ConePoint x = sample_cone_point(sig, derive_seed(c.seed, static_cast<std::uint64_t>(i)));
    for (int k = 0; k <= steps; ++k) {
      const double t = 2.0 * std::numbers::pi * k / steps;
      const TorusAngles a = torus_coords(x.scaled(std::polar(1.0, t)));
      rows.push_back({"fiber", i, t, a.phi1, a.phi2, 0.0, 0.0});
    }
    const TorusAngles a = torus_coords(x);
    rows.push_back({"null", i, 0.0, a.phi1, a.phi2, 1.0, 1.0});
    rows.push_back({"null", i, 0.0, a.phi1, a.phi2, 1.0, -1.0});
  }
  if (c.format == "csv") {
    std::ostringstream out;
    out.precision(17);
    out << "kind,id,t,phi1,phi2,dphi1,dphi2\n";
    for (const auto& r : rows)
      out << r.kind << ',' << r.id << ',' << r.t << ',' << r.phi1 << ',' << r.phi2 << ',' << r.dphi1 << ','
          << r.dphi2 << '\n';
    emit(c, out.str());
  } else {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back({{"kind", r.kind}, {"id", r.id}, {"t", r.t}, {"phi1", r.phi1}, {"phi2", r.phi2},
                     {"dphi1", r.dphi1}, {"dphi2", r.dphi2}});
    emit_json(c, {{"rows", arr}});
  }
  std::cerr << orbits << " fiber orbits, " << rows.size() << " rows\n";
  return 0;
}

int cmd_oracle(const Common& c) {
  require_json(c);
  const Signature sig = parse_signature(c.sig);
  const int trials = trials_or(c, 1000);
  const exact::QChart chart = exact::QChart::standard(sig);
  Rng rng(c.seed, 0x0E);
  const auto draw = [&rng] {
    mpq_class q(static_cast<long>(rng.uniform() * 19.0) - 9, 1 + static_cast<long>(rng.uniform() * 6.0));
    q.canonicalize();
    return q;
  };
  int recovered = 0;
  Json first;
  for (int i = 0; i < trials; ++i) {
    std::vector<exact::QGaussian> y;
    for (int k = 0; k < sig.n() - 2; ++k) y.emplace_back(draw(), draw());
    const mpq_class r = draw();
    recovered += exact::exact_kappa_roundtrip(chart, r, y) ? 1 : 0;
    if (i == 0) first = {{"r", exact::to_string(r)}, {"kappa0", exact::to_json(exact::exact_kappa0(chart, r, y))}};
  }
  Json twins = Json::array();
  bool ok = recovered == trials;
  for (const char* name : {"field_axioms", "twin", "exactness"}) {
    const RunReport rep = run_suite(name, sig, c.seed, std::min(trials, 200), c.tol);
    ok = ok && rep.ok();
    twins.push_back(to_json(rep));
  }
  emit_json(c, {{"ok", ok}, {"roundtrip", {{"trials", trials}, {"recovered", recovered}}}, {"example", first},
                {"reports", twins}});
  std::cerr << "exact round trip " << recovered << "/" << trials << (ok ? ", twins agree\n" : ", FAILED\n");
  return ok ? 0 : kFailed;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--sig", c.sig, "signature p,q");
  cmd->add_option("--seed", c.seed, "base seed")->envname("CONEQ_SEED");
  cmd->add_option("--trials", c.trials, "number of trials or samples");
  cmd->add_option("--tol", c.tol, "override the suite tolerance");
  cmd->add_option("--out", c.out, "write output to PATH instead of stdout");
  cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coneq: quadrics of pseudo-Hermitian spaces"};
  app.require_subcommand(1);
  Common common;
  Coords coords;
  std::string suite = "all", frame = "adapted";
  double step = 1e-5;
  int steps = 64;

  auto* sample = app.add_subcommand("sample", "sample cone points with their canonical representatives");
  add_common(sample, common);

  auto* verify = app.add_subcommand("verify", "run property suites");
  add_common(verify, common);
  verify->add_option("--suite", suite, "suite name or 'all'");

  auto* chart = app.add_subcommand("chart", "the kappa chart centered at --x (default e1+en)");
  chart->require_subcommand(1);
  auto* forward = chart->add_subcommand("forward", "kappa(r, y)");
  auto* inverse = chart->add_subcommand("inverse", "chart coordinates of --b");
  for (auto* s : {forward, inverse}) {
    add_common(s, common);
    s->add_option("--x", coords.x, "chart center, re,im interleaved");
  }
  forward->add_option("--r", coords.r, "real chart coordinate");
  forward->add_option("--y", coords.y, "M_u coordinates, re,im interleaved");
  inverse->add_option("--b", coords.b, "cone point, re,im interleaved")->required();

  auto* metric = app.add_subcommand("metric", "induced metric on T Q' at --x (default sampled)");
  add_common(metric, common);
  metric->add_option("--x", coords.x, "cone point, re,im interleaved");
  metric->add_option("--frame", frame, "adapted or epsilon")->check(CLI::IsMember({"adapted", "epsilon"}));

  auto* cometric = app.add_subcommand("cometric", "degenerate cometric on T* Q~");
  add_common(cometric, common);
  cometric->add_option("--x", coords.x, "cone point, re,im interleaved");

  auto* aperp = app.add_subcommand("aperp", "the boundary set a_perp of the chart at --x");
  aperp->require_subcommand(1);
  auto* classify = aperp->add_subcommand("classify", "apex or generic stratum of --b (default sampled)");
  auto* dim = aperp->add_subcommand("dim", "numerical dimension of the generic stratum");
  for (auto* s : {classify, dim}) {
    add_common(s, common);
    s->add_option("--x", coords.x, "chart center, re,im interleaved");
  }
  classify->add_option("--b", coords.b, "point of a_perp, re,im interleaved");
  dim->add_option("--step", step, "finite-difference step");

  auto* torus = app.add_subcommand("torus", "plot data for the (1,1) torus");
  add_common(torus, common);
  torus->add_option("--steps", steps, "samples per fiber orbit")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "exact-arithmetic twin checks");
  add_common(oracle, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*sample) return cmd_sample(common);
    if (*verify) return cmd_verify(common, suite);
    if (*forward) return cmd_chart(common, coords, true);
    if (*inverse) return cmd_chart(common, coords, false);
    if (*metric) return cmd_metric(common, coords, frame);
    if (*cometric) return cmd_cometric(common, coords);
    if (*classify) return cmd_aperp(common, coords, true, step);
    if (*dim) return cmd_aperp(common, coords, false, step);
    if (*torus) {
      if (torus->count("--format") == 0) common.format = "csv";
      return cmd_torus(common, steps);
    }
    if (*oracle) return cmd_oracle(common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
