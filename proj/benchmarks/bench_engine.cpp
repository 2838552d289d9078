#include <benchmark/benchmark.h>

#include <random>

#include "genoid/lambda.hpp"
#include "genoid/parser.hpp"
#include "genoid/printer.hpp"
#include "genoid/random.hpp"
#include "genoid/validity.hpp"

using namespace genoid;

namespace {

std::vector<TermPtr> sample_terms(int count, int depth) {
  std::mt19937_64 rng(kDefaultSeed);
  TermGenConfig gen;
  gen.max_depth = depth;
  std::vector<TermPtr> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_term(rng, gen));
  return out;
}

/// n-fold application of the Church numeral pattern to grow beta work.
TermPtr church(int n) {
  TermPtr body = var(1);
  for (int i = 0; i < n; ++i) body = app(var(2), body);
  return lam(lam(body));
}

void BM_SigmaNormalize(benchmark::State& state) {
  const auto terms = sample_terms(256, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_normalize(terms[i++ % terms.size()]));
  }
}
BENCHMARK(BM_SigmaNormalize)->Arg(4)->Arg(6)->Arg(8);

void BM_SubstCompose(benchmark::State& state) {
  std::mt19937_64 rng(kDefaultSeed);
  TermGenConfig gen;
  gen.max_depth = 5;
  const SubstPtr u = random_subst(rng, gen);
  const SubstPtr v = random_subst(rng, gen);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subst_normalize(comp(u, v)));
  }
}
BENCHMARK(BM_SubstCompose);

void BM_BetaSKK(benchmark::State& state) {
  const TermPtr skk =
      app(app(app(combinator("S"), combinator("K")), combinator("K")), var(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_eta_normalize(skk));
  }
}
BENCHMARK(BM_BetaSKK);

void BM_BetaChurchMult(benchmark::State& state) {
  // multiplication of Church numerals: \.\. x2 (x1 ...) composition
  const TermPtr mult = parse_term("\\.\\.\\. x3 (x2 x1)");
  const TermPtr n = church(static_cast<int>(state.range(0)));
  const TermPtr product = app(app(mult, n), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_eta_normalize(product));
  }
}
BENCHMARK(BM_BetaChurchMult)->Arg(4)->Arg(8)->Arg(16);

void BM_OracleNormalize(benchmark::State& state) {
  const NamedPtr term = from_debruijn(
      app(app(parse_term("\\.\\.\\. x3 (x2 x1)"), church(8)), church(8)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_normalize(term, 100'000));
  }
}
BENCHMARK(BM_OracleNormalize);

void BM_CheckValidityAxiomIII(benchmark::State& state) {
  const FormulaPtr p = atom("P", {var(1)});
  const FormulaPtr f = implies(p, subf(exists(p), subst_shift()));
  ValidityOptions opts;
  opts.max_carrier = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_validity(f, opts));
  }
}
BENCHMARK(BM_CheckValidityAxiomIII)->Arg(2)->Arg(3);

void BM_ParseRoundTrip(benchmark::State& state) {
  const auto terms = sample_terms(128, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    const TermPtr& t = terms[i++ % terms.size()];
    benchmark::DoNotOptimize(parse_term(print_term(t)));
  }
}
BENCHMARK(BM_ParseRoundTrip);

} // namespace

BENCHMARK_MAIN();
