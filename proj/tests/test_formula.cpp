#include <doctest.h>

#include <random>

#include "genoid/formula.hpp"
#include "genoid/printer.hpp"
#include "genoid/random.hpp"
#include "genoid/validity.hpp"

using namespace genoid;

namespace {

Signature pq_signature() {
  Signature sig;
  sig.predicates["P"] = 1;
  sig.predicates["Q"] = 2;
  return sig;
}

} // namespace

TEST_CASE("formula substitution") {
  const SubstPtr u = cons(var(3), subst_id());
  CHECK(equal(subst_formula(falsum(), u), falsum()));
  CHECK(equal(subst_formula(atom("P", {var(1)}), u), atom("P", {var(3)})));

  // the binder lifts the substitution
  const FormulaPtr f = exists(atom("P", {var(1), var(2)}));
  CHECK(equal(subst_formula(f, subst_shift()), exists(atom("P", {var(1), var(3)}))));

  // implication distributes
  const FormulaPtr g = implies(atom("P", {var(1)}), atom("P", {var(2)}));
  CHECK(equal(subst_formula(g, subst_shift()),
              implies(atom("P", {var(2)}), atom("P", {var(3)}))));

  // stacked closures compose
  const FormulaPtr h = subf(subf(atom("P", {var(1)}), subst_shift()), subst_shift());
  CHECK(equal(normalize_formula(h), atom("P", {var(3)})));
}

TEST_CASE("formula rank") {
  CHECK(formula_rank(atom("P", {var(3)})) == 3);
  CHECK(formula_rank(exists(atom("P", {var(1)}))) == 0);
  CHECK(formula_rank(implies(atom("P", {var(1)}), exists(atom("Q", {var(1), var(2)})))) == 1);
  CHECK(formula_rank(falsum()) == 0);
  CHECK(formula_rank(subf(atom("P", {var(1)}), shift_n(4))) == 5);
}

TEST_CASE("formula evaluation") {
  const Structure m = parse_structure("2\npred P/1: 1\npred Q/2: 0,1 1,0\n");
  const Assignment env{{1, 0}, 0};

  CHECK(!eval_formula(falsum(), m, env));
  CHECK(eval_formula(verum(), m, env));
  CHECK(eval_formula(atom("P", {var(1)}), m, env));
  CHECK(!eval_formula(atom("P", {var(2)}), m, env));
  CHECK(eval_formula(atom("Q", {var(1), var(2)}), m, env));

  const FormulaPtr p = atom("P", {var(1)});
  CHECK(eval_formula(implies(p, p), m, env));
  CHECK(eval_formula(disj(p, falsum()), m, env));
  CHECK(!eval_formula(conj(p, falsum()), m, env));
  CHECK(!eval_formula(neg(p), m, env));

  // the raw binder quantifies a fresh first slot
  CHECK(eval_formula(exists(atom("P", {var(1)})), m, env));
  CHECK(eval_formula(exists(atom("P", {var(2)})), m, env)); // reads outer x1 = 1
  CHECK(!eval_formula(exists(atom("P", {var(3)})), m, env)); // reads outer x2 = 0

  CHECK_THROWS_AS(eval_formula(atom("R", {var(1)}), m, env), DomainError);
  CHECK_THROWS_AS(eval_formula(atom("P", {var(1), var(2)}), m, env), DomainError);
}

TEST_CASE("derived existential binder") {
  // exists x1 replaces the first coordinate
  const Structure m = parse_structure("3\npred P/1: 2\n");
  const FormulaPtr f = exists_xi(1, atom("P", {var(1)}));
  CHECK(eval_formula(f, m, Assignment{{0}, 0}));

  // exists x2 leaves x1 alone
  const FormulaPtr g = exists_xi(2, atom("P", {var(1)}));
  CHECK(!eval_formula(g, m, Assignment{{0}, 0}));
  CHECK(eval_formula(g, m, Assignment{{2}, 0}));

  CHECK_THROWS_AS(exists_xi(0, f), DomainError);
}

TEST_CASE("derived binder semantics by brute force") {
  std::mt19937_64 rng(43);
  const Signature sig = pq_signature();
  FormulaGenConfig gen;
  gen.sig = &sig;
  gen.max_depth = 3;
  gen.max_index = 3;

  for (int i = 0; i < 60; ++i) {
    const FormulaPtr f = normalize_formula(random_formula(rng, gen));
    const FormulaPtr ex1 = exists_xi(1, f);
    for (int carrier = 1; carrier <= 3; ++carrier) {
      const Structure m = random_structure(rng, sig, carrier);
      Assignment env = random_assignment(rng, carrier, 4);
      bool expected = false;
      for (int a = 0; a < carrier && !expected; ++a) {
        Assignment replaced = env;
        replaced.values[0] = a;
        expected = eval_formula(f, m, replaced);
      }
      CHECK(eval_formula(ex1, m, env) == expected);
    }
  }
}

TEST_CASE("substitution lemma") {
  std::mt19937_64 rng(47);
  const Signature sig = pq_signature();
  FormulaGenConfig gen;
  gen.sig = &sig;
  gen.max_depth = 4;
  gen.max_index = 3;
  FirstOrderGenConfig terms;
  terms.max_index = 3;

  for (int i = 0; i < 150; ++i) {
    const FormulaPtr f = random_formula(rng, gen);
    const SubstPtr u = random_first_order_subst(rng, terms, 2);
    const int carrier = 1 + static_cast<int>(rng() % 3);
    const Structure m = random_structure(rng, sig, carrier);
    const Assignment env = random_assignment(rng, carrier, 5);

    const int needed = formula_rank(f);
    Assignment composed;
    for (int j = 1; j <= needed; ++j)
      composed.values.push_back(eval_term(norm_term(closure(var(j), u)), m, env));
    composed.pad = 0;
    CHECK(eval_formula(subst_formula(f, u), m, env) == eval_formula(f, m, composed));
  }
}

TEST_CASE("evaluation ignores coordinates past the rank") {
  std::mt19937_64 rng(53);
  const Signature sig = pq_signature();
  FormulaGenConfig gen;
  gen.sig = &sig;
  gen.max_depth = 4;
  gen.max_index = 3;

  for (int i = 0; i < 100; ++i) {
    const FormulaPtr f = random_formula(rng, gen);
    const int rank = formula_rank(f);
    const int carrier = 1 + static_cast<int>(rng() % 3);
    const Structure m = random_structure(rng, sig, carrier);
    Assignment a = random_assignment(rng, carrier, rank);
    Assignment b = a;
    b.values.push_back(static_cast<int>(rng() % carrier));
    b.pad = static_cast<int>(rng() % carrier);
    CHECK(eval_formula(f, m, a) == eval_formula(f, m, b));
  }
}

TEST_CASE("validity verdicts") {
  const FormulaPtr p = atom("P", {var(1)});
  const FormulaPtr q = atom("Q", {var(1)});

  CHECK(!check_validity(implies(p, p), {3, 1'000'000}).invalid());
  CHECK(!check_validity(implies(implies(implies(p, q), p), p), {3, 1'000'000}).invalid());
  CHECK(!check_validity(implies(p, subf(exists(p), subst_shift())), {3, 1'000'000}).invalid());

  const Verdict converse = check_validity(implies(subf(exists(p), subst_shift()), p), {2, 1'000'000});
  REQUIRE(converse.invalid());
  REQUIRE(converse.counterexample.has_value());
  CHECK(converse.counterexample->structure.carrier == 2);
  CHECK(!eval_formula(implies(subf(exists(p), subst_shift()), p),
                      converse.counterexample->structure, converse.counterexample->assignment));

  const Verdict dist =
      check_validity(implies(conj(exists(p), exists(q)), exists(conj(p, q))), {2, 1'000'000});
  REQUIRE(dist.invalid());
  CHECK(dist.counterexample->structure.carrier <= 2);
}

TEST_CASE("the least counterexample is reported") {
  // exists. P(x1) fails first on the one-element structure with empty P.
  const Verdict v = check_validity(exists(atom("P", {var(1)})), {3, 1'000'000});
  REQUIRE(v.invalid());
  CHECK(v.counterexample->structure.carrier == 1);
  CHECK(print_structure(v.counterexample->structure) == "1\npred P/1:\n");
  CHECK(v.counterexample->assignment.values.empty());
}

TEST_CASE("equivalence checking") {
  const FormulaPtr p = atom("P", {var(1)});
  const FormulaPtr q = atom("Q", {var(1)});
  CHECK(!check_equivalence(p, p, {3, 1'000'000}).invalid());
  CHECK(!check_equivalence(neg(neg(p)), p, {3, 1'000'000}).invalid());
  CHECK(!check_equivalence(exists(disj(p, q)), disj(exists(p), exists(q)), {3, 1'000'000})
             .invalid());
  CHECK(check_equivalence(p, q, {2, 1'000'000}).invalid());
}

TEST_CASE("enumeration caps are enforced") {
  // a ternary predicate over carrier 3 alone needs 2^27 structures
  const FormulaPtr big = atom("R", {var(1), var(2), var(3)});
  try {
    check_validity(big, {3, 1'000});
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(e.estimate > 1'000);
  }
}

TEST_CASE("verdict replays survive the text format") {
  const FormulaPtr p = atom("P", {var(1)});
  const FormulaPtr f = implies(subf(exists(p), subst_shift()), p);
  const Verdict v = check_validity(f, {2, 1'000'000});
  REQUIRE(v.invalid());
  const Structure replayed = parse_structure(print_structure(v.counterexample->structure));
  CHECK(!eval_formula(f, replayed, v.counterexample->assignment));
}

TEST_CASE("signatures are collected with arity checking") {
  const FormulaPtr f =
      implies(atom("P", {fun_app("g", {var(1)})}), exists(atom("Q", {var(1), var(2)})));
  const Signature sig = signature_of(f);
  CHECK(sig.predicates.at("P") == 1);
  CHECK(sig.predicates.at("Q") == 2);
  CHECK(sig.functions.at("g") == 1);

  const FormulaPtr clash = conj(atom("P", {var(1)}), atom("P", {var(1), var(2)}));
  CHECK_THROWS_AS(signature_of(clash), DomainError);
}

TEST_CASE("derived connectives are not new constructors") {
  const FormulaPtr p = atom("P", {var(1)});
  CHECK(equal(neg(p), implies(p, falsum())));
  CHECK(equal(verum(), implies(falsum(), falsum())));
  CHECK(equal(disj(p, p), implies(implies(p, falsum()), p)));
}
