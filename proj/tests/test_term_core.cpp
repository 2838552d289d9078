#include <doctest.h>

#include <random>

#include "genoid/printer.hpp"
#include "genoid/random.hpp"
#include "genoid/sigma.hpp"

using namespace genoid;

TEST_CASE("variable constructor") {
  CHECK(equal(var(1), var(1)));
  CHECK(!equal(var(1), var(2)));
  CHECK_THROWS_AS(var(0), DomainError);
  CHECK_THROWS_AS(var(-3), DomainError);
}

TEST_CASE("x_i is the (i-1)-fold shift closure of x") {
  for (int i = 1; i <= 8; ++i)
    CHECK(equal(norm_term(closure(var(1), shift_n(i - 1))), var(i)));
}

TEST_CASE("head projection") {
  // x [a . u] -> a
  CHECK(equal(norm_term(closure(var(1), cons(var(2), subst_id()))), var(2)));
  // x2 [x5 . id] -> x1
  CHECK(equal(norm_term(closure(var(2), cons(var(5), subst_id()))), var(1)));
  // x5 under a five-element list picks the fifth entry
  std::vector<TermPtr> heads;
  for (int i = 1; i <= 5; ++i) heads.push_back(var(10 + i));
  CHECK(equal(norm_term(closure(var(5), cons_list(heads, subst_id()))), var(15)));
}

TEST_CASE("identity substitution is a no-op") {
  const TermPtr t = app(lam(var(1)), fun_app("f", {var(2)}));
  const TermPtr normal = norm_term(t);
  CHECK(norm_term(closure(normal, subst_id())).get() == normal.get());
}

TEST_CASE("closures push through binders") {
  // (\. x1 x2)[x9 . id] -> \. x1 x10
  const TermPtr t = closure(lam(app(var(1), var(2))), cons(var(9), subst_id()));
  CHECK(equal(norm_term(t), lam(app(var(1), var(10)))));
}

TEST_CASE("closures push through function symbols") {
  const TermPtr t = closure(fun_app("f", {var(1), var(3)}), cons(var(7), subst_id()));
  CHECK(equal(norm_term(t), fun_app("f", {var(7), var(2)})));
}

TEST_CASE("substitution normal forms") {
  // ^ ; [x . id] -> id
  CHECK(equal(norm_subst(comp(subst_shift(), cons(var(1), subst_id()))), subst_id()));
  // id ; ^ -> ^
  CHECK(equal(norm_subst(comp(subst_id(), subst_shift())), subst_shift()));
  // pairing collapse: [x . ^] -> id
  CHECK(equal(norm_subst(cons(var(1), subst_shift())), subst_id()));
  // [x2 . ^^2] -> ^
  CHECK(equal(norm_subst(cons(var(2), shift_n(2))), subst_shift()));
  // [x5 . x2 . ^^2] -> [x5 . ^]
  CHECK(equal(norm_subst(cons(var(5), cons(var(2), shift_n(2)))),
              cons(var(5), subst_shift())));
}

TEST_CASE("normal forms satisfy the structural predicate") {
  std::mt19937_64 rng(7);
  TermGenConfig gen;
  gen.max_depth = 6;
  for (int i = 0; i < 500; ++i) {
    CHECK(sigma_normal(norm_term(random_term(rng, gen))));
    CHECK(sigma_normal(norm_subst(random_subst(rng, gen))));
  }
}

TEST_CASE("fuel exhaustion is reported, not thrown") {
  TermPtr t = var(1);
  for (int i = 0; i < 40; ++i) t = app(closure(t, cons(var(2), subst_id())), t);
  const auto report = sigma_normalize(t, 10);
  REQUIRE(report.status == NormStatus::FuelExhausted);
  CHECK(report.steps >= 10);
  CHECK(equal(report.result, t)); // input returned unchanged
  CHECK_THROWS_AS(norm_term(t, 10), FuelError);
}

TEST_CASE("steps are zero on already-normal input") {
  const auto report = sigma_normalize(app(var(1), lam(var(2))));
  CHECK(report.normal());
  CHECK(report.steps == 0);
}

TEST_CASE("genoid axioms on random pairs") {
  std::mt19937_64 rng(11);
  TermGenConfig gen;
  gen.max_depth = 6;
  for (int i = 0; i < 300; ++i) {
    const TermPtr a = norm_term(random_term(rng, gen));
    const TermPtr t = random_term(rng, gen);
    const SubstPtr u = norm_subst(random_subst(rng, gen));
    const SubstPtr v = norm_subst(random_subst(rng, gen));

    CHECK(equal(norm_term(closure(var(1), cons(a, u))), a));
    CHECK(equal(norm_subst(comp(subst_shift(), cons(a, u))), u));
    CHECK(equal(norm_subst(cons(closure(var(1), u), comp(subst_shift(), u))), u));
    CHECK(equal(norm_term(closure(closure(t, u), v)), norm_term(closure(t, comp(u, v)))));
    CHECK(equal(norm_subst(comp(cons(a, u), v)),
                norm_subst(cons(closure(a, v), comp(u, v)))));
  }
}

TEST_CASE("finite rank") {
  CHECK(finite_rank(var(3)) == 3);
  CHECK(finite_rank(lam(var(1))) == 0);
  CHECK(finite_rank(lam(var(4))) == 3);
  CHECK(finite_rank(fun_app("c", {})) == 0);
  CHECK(finite_rank(app(var(2), lam(var(1)))) == 2);
  // rank is computed on the normal form
  CHECK(finite_rank(closure(var(1), cons(var(6), subst_id()))) == 6);
}

TEST_CASE("delta") {
  CHECK(equal(norm_subst(delta(subst_id())), subst_id()));
  CHECK(equal(delta(subst_shift()), cons(var(1), comp(subst_shift(), subst_shift()))));
}

TEST_CASE("monad laws") {
  const SubstPtr minus = cons(var(1), subst_id());
  CHECK(equal(norm_subst(comp(subst_shift(), minus)), subst_id()));
  CHECK(equal(norm_subst(comp(delta(subst_shift()), minus)), subst_id()));
  CHECK(equal(norm_subst(comp(minus, minus)), norm_subst(comp(delta(minus), minus))));
}

TEST_CASE("kleisli product") {
  std::mt19937_64 rng(13);
  TermGenConfig gen;
  gen.max_depth = 4;
  for (int i = 0; i < 100; ++i) {
    const SubstPtr v = random_subst(rng, gen);
    CHECK(equal(norm_subst(kleisli_star(subst_id(), v)), norm_subst(cons(var(1), v))));
    CHECK(equal(norm_subst(kleisli_star(subst_shift(), v)), norm_subst(v)));

    // u * id acts like u followed by the first-coordinate merge.
    const SubstPtr u = random_subst(rng, gen);
    const SubstPtr star = kleisli_star(u, subst_id());
    for (int j = 1; j <= 5; ++j)
      CHECK(equal(norm_term(closure(var(j), star)),
                  norm_term(closure(closure(var(j), u), cons(var(1), subst_id())))));
  }
}

TEST_CASE("extended pairing identity") {
  std::mt19937_64 rng(17);
  TermGenConfig gen;
  gen.max_depth = 5;
  for (int i = 0; i < 200; ++i) {
    const SubstPtr u = norm_subst(random_subst(rng, gen));
    for (int n = 1; n <= 5; ++n) {
      std::vector<TermPtr> heads;
      for (int j = 1; j <= n; ++j) heads.push_back(closure(var(j), u));
      CHECK(equal(norm_subst(cons_list(heads, comp(shift_n(n), u))), u));
    }
  }
}

TEST_CASE("reserved function symbols are rejected") {
  CHECK_THROWS_AS(fun_app("x3", {}), DomainError);
  CHECK_THROWS_AS(fun_app("I", {var(1)}), DomainError);
  CHECK_THROWS_AS(fun_app("exists", {}), DomainError);
  CHECK_NOTHROW(fun_app("x0y", {}));
  CHECK_NOTHROW(fun_app("shift", {}));
}
