#pragma once

#include <functional>
#include <string>
#include <vector>

#include "genoid/random.hpp"
#include "genoid/sigma.hpp"

namespace genoid {

struct SuiteResult {
  std::string name;
  long cases = 0;
  std::vector<std::string> failures; // capped; failures_total has the real count
  long failures_total = 0;
  double seconds = 0;

  bool ok() const { return failures_total == 0; }
};

/// Hook for mutation testing: the axiom suite normalizes terms through
/// this, so a deliberately broken normalizer must make it fail.
using TermNormalizer = std::function<NormalizeReport<TermPtr>(const TermPtr&, std::uint64_t)>;

// One suite per acceptance area. Default sample counts are the full ones;
// pass smaller counts for quick runs. All suites are deterministic in
// (seed, samples).
SuiteResult genoid_axiom_suite(std::uint64_t seed, int pairs = 10'000,
                               const TermNormalizer& normalizer = {});
SuiteResult monad_suite();
SuiteResult combinator_suite(std::uint64_t seed, int triples = 1'000);
SuiteResult lambda_formula_suite(std::uint64_t seed, int samples = 1'000);
SuiteResult oracle_differential_suite(std::uint64_t seed, int terms = 1'000);
SuiteResult rank_law_suite(std::uint64_t seed, int samples = 2'000);
SuiteResult clone_suite(std::uint64_t seed, int terms = 500);
SuiteResult quantifier_suite(std::uint64_t seed, int formulas = 500);
SuiteResult validity_suite();
SuiteResult parser_roundtrip_suite(std::uint64_t seed, int samples = 5'000);

/// Every suite, full counts (or divided by 20 when quick), default order.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed = kDefaultSeed, bool quick = false);

} // namespace genoid
