#include <doctest.h>

#include "genoid/suites.hpp"

using namespace genoid;

TEST_CASE("every suite passes at reduced scale") {
  for (const auto& r : run_all_suites(kDefaultSeed, true)) {
    INFO(r.name, ": ", r.failures_total, " failures of ", r.cases, " cases");
    CHECK(r.ok());
    CHECK(r.cases > 0);
  }
}

TEST_CASE("suites are deterministic in the seed") {
  const SuiteResult a = rank_law_suite(99, 100);
  const SuiteResult b = rank_law_suite(99, 100);
  CHECK(a.failures_total == b.failures_total);
  CHECK(a.cases == b.cases);
}

TEST_CASE("a broken rewrite rule is detected") {
  // Mutant: the identity-substitution rule t[id] -> t is replaced by one
  // that discards the body.
  const TermNormalizer broken = [](const TermPtr& t,
                                   std::uint64_t fuel) -> NormalizeReport<TermPtr> {
    if (const auto* c = std::get_if<Closure>(&t->node))
      if (std::holds_alternative<Id>(c->subst->node))
        return {var(99), 1, NormStatus::Normal};
    return sigma_normalize(t, fuel);
  };
  const SuiteResult mutated = genoid_axiom_suite(kDefaultSeed, 200, broken);
  CHECK(!mutated.ok());
  CHECK(mutated.failures_total > 0);

  // Mutant: normal forms get their top variable bumped, breaking idempotence.
  const TermNormalizer bumped = [](const TermPtr& t,
                                   std::uint64_t fuel) -> NormalizeReport<TermPtr> {
    auto report = sigma_normalize(t, fuel);
    if (const auto* v = std::get_if<Var>(&report.result->node))
      report.result = var(v->index + 1);
    return report;
  };
  CHECK(!genoid_axiom_suite(kDefaultSeed, 200, bumped).ok());

  // The real engine at the same scale is clean.
  CHECK(genoid_axiom_suite(kDefaultSeed, 200).ok());
}
