#include <doctest.h>

#include <random>

#include "genoid/lambda.hpp"
#include "genoid/printer.hpp"
#include "genoid/random.hpp"

using namespace genoid;

namespace {

TermPtr nf(const TermPtr& t) { return beta_eta_nf(t, {true, true, 10'000}); }

} // namespace

TEST_CASE("combinator terms") {
  CHECK(equal(combinator("I"), lam(var(1))));
  CHECK(equal(combinator("K"), lam(lam(var(2)))));
  CHECK(equal(combinator("S"),
              lam(lam(lam(app(app(var(3), var(1)), app(var(2), var(1))))))));
  CHECK(finite_rank(combinator("S")) == 0);
  CHECK_THROWS_AS(combinator("B"), DomainError);
}

TEST_CASE("beta reduction basics") {
  CHECK(equal(nf(app(combinator("I"), var(5))), var(5)));
  CHECK(equal(nf(app(app(combinator("K"), var(1)), var(2))), var(1)));
  const TermPtr skk =
      app(app(app(combinator("S"), combinator("K")), combinator("K")), var(1));
  CHECK(equal(nf(skk), var(1)));
}

TEST_CASE("beta through an explicit closure") {
  // ((\a) u) b = a [b . u]
  const TermPtr a = app(var(1), var(3));
  const SubstPtr u = cons(var(7), subst_id());
  const TermPtr b = var(2);
  CHECK(equal(nf(app(closure(lam(a), u), b)), nf(closure(a, cons(b, u)))));
}

TEST_CASE("constant functions discard their argument") {
  // (\ (a ^)) b = a, even when b has no normal form
  const TermPtr omega = app(lam(app(var(1), var(1))), lam(app(var(1), var(1))));
  const TermPtr a = app(var(1), var(2));
  CHECK(equal(nf(app(lam(closure(a, subst_shift())), omega)), a));
}

TEST_CASE("eta contraction") {
  // \. (a ^) x1 -> a when the bound coordinate does not occur
  CHECK(equal(nf(lam(app(closure(var(1), subst_shift()), var(1)))), var(1)));

  // the bound coordinate occurring blocks it
  const TermPtr self = lam(app(var(1), var(1)));
  CHECK(equal(nf(self), self));

  // with eta disabled the expansion is kept
  const auto report =
      beta_eta_normalize(lam(app(closure(var(1), subst_shift()), var(1))), {true, false, 100});
  REQUIRE(report.normal());
  CHECK(equal(report.result, lam(app(var(2), var(1)))));
}

TEST_CASE("divergent terms exhaust their fuel") {
  const TermPtr omega = app(lam(app(var(1), var(1))), lam(app(var(1), var(1))));
  const auto report = beta_eta_normalize(omega, {true, true, 123});
  REQUIRE(report.status == NormStatus::FuelExhausted);
  CHECK(report.steps == 123);
  CHECK(sigma_normal(report.result));
  CHECK_THROWS_AS(beta_eta_nf(omega, {true, true, 50}), FuelError);
}

TEST_CASE("flags can turn beta off") {
  const TermPtr redex = app(lam(var(1)), var(2));
  const auto report = beta_eta_normalize(redex, {false, false, 100});
  REQUIRE(report.normal());
  CHECK(equal(report.result, redex));
}

TEST_CASE("classical binder") {
  CHECK(equal(nf(classic_lambda(1, var(1))), combinator("I")));
  CHECK(equal(nf(classic_lambda(1, classic_lambda(2, var(1)))), combinator("K")));
  CHECK_THROWS_AS(classic_lambda(0, var(1)), DomainError);

  // binding x1 is the shifted plain binder: \x1. t = (\ t) ^
  std::mt19937_64 rng(23);
  TermGenConfig gen;
  gen.max_depth = 5;
  for (int i = 0; i < 200; ++i) {
    const TermPtr t = random_term(rng, gen);
    CHECK(equal(norm_term(classic_lambda(1, t)),
                norm_term(closure(lam(norm_term(t)), subst_shift()))));
  }
}

TEST_CASE("classical binder targets its coordinate") {
  // \x2. x2 applied to anything gives it back; \x2. x1 keeps x1 free.
  CHECK(equal(nf(app(classic_lambda(2, var(2)), var(9))), var(9)));
  CHECK(equal(nf(app(classic_lambda(2, var(1)), var(9))), var(1)));
}

TEST_CASE("closure of a term") {
  const ClosureResult one = closure_of(var(1));
  CHECK(one.rank == 1);
  CHECK(equal(one.closed, lam(var(1))));
  CHECK(equal(nf(app(one.closed, var(1))), var(1)));

  const ClosureResult closed = closure_of(combinator("K"));
  CHECK(closed.rank == 0);
  CHECK(equal(closed.closed, combinator("K")));

  const ClosureResult pair = closure_of(app(var(1), var(2)));
  CHECK(pair.rank == 2);
  CHECK(equal(pair.closed, lam(lam(app(var(1), var(2))))));
  CHECK(equal(nf(app(app(pair.closed, var(2)), var(1))), app(var(1), var(2))));
}

TEST_CASE("applying a closure to its variables restores the term") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 150; ++i) {
    TermPtr t = random_pure_term(rng, 10, 4);
    const auto report = beta_eta_normalize(t, {true, true, 1'000});
    if (!report.normal()) continue;
    t = report.result;
    const ClosureResult c = closure_of(t);
    CHECK(finite_rank(c.closed) == 0);
    TermPtr applied = c.closed;
    for (int j = c.rank; j >= 1; --j) applied = app(applied, var(j));
    CHECK(equal(nf(applied), t));
  }
}
