#pragma once

// Randomized property suites, one per invariant of the library. Each trial
// draws from its own seed stream, so reports are reproducible and independent
// of evaluation order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coneq/pseudoherm.hpp"

namespace coneq {

struct TrialOutcome {
  double residual = 0.0;
  bool pass = true;
  std::string note;
};

struct SuiteInfo {
  std::string name;
  std::string module;
  std::string description;
  /// Threshold on the residual; `--tol` overrides it.
  double default_tol;
};

struct Counterexample {
  int trial;
  std::uint64_t seed;
  double residual;
  std::string note;
};

struct RunReport {
  std::string suite;
  Signature signature;
  std::uint64_t seed;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  double elapsed_seconds = 0.0;
  std::optional<Counterexample> counterexample;

  bool ok() const { return failed == 0; }
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(std::string_view name);

/// Seed of trial `index` in a run seeded with `seed` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Runs `trials` trials of a named suite. Throws Domain for unknown names.
RunReport run_suite(std::string_view name, const Signature& sig, std::uint64_t seed, int trials,
                    std::optional<double> tol = std::nullopt);

}  // namespace coneq
