#include <doctest.h>

#include <random>

#include "genoid/parser.hpp"
#include "genoid/printer.hpp"
#include "genoid/random.hpp"

using namespace genoid;

TEST_CASE("term grammar") {
  CHECK(equal(parse_term("x1"), var(1)));
  CHECK(equal(parse_term("x12"), var(12)));
  CHECK(equal(parse_term("x1 x2 x3"), app(app(var(1), var(2)), var(3))));
  CHECK(equal(parse_term("x1 (x2 x3)"), app(var(1), app(var(2), var(3)))));
  CHECK(equal(parse_term("\\. x1"), lam(var(1))));
  CHECK(equal(parse_term("\\. x1 x2"), lam(app(var(1), var(2))))); // body extends right
  CHECK(equal(parse_term("(\\. x1) x2"), app(lam(var(1)), var(2))));
  CHECK(equal(parse_term("x1 \\. x2"), app(var(1), lam(var(2)))));
  CHECK(equal(parse_term("f(x1, x2)"), fun_app("f", {var(1), var(2)})));
  CHECK(equal(parse_term("c()"), fun_app("c", {})));
  CHECK(equal(parse_term("x1[^]"), closure(var(1), subst_shift())));
  CHECK(equal(parse_term("x1[^][id]"), closure(closure(var(1), subst_shift()), subst_id())));
  // postfix closures bind tighter than application
  CHECK(equal(parse_term("x1 x2[^]"), app(var(1), closure(var(2), subst_shift()))));
  CHECK(equal(parse_term("(x1 x2)[^]"), closure(app(var(1), var(2)), subst_shift())));
  CHECK(equal(parse_term("I"), lam(var(1))));
  CHECK(equal(parse_term("K x1"), app(lam(lam(var(2))), var(1))));
  CHECK(equal(parse_term("S"), parse_term("\\.\\.\\. x3 x1 (x2 x1)")));
}

TEST_CASE("term grammar errors") {
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("x0"), ParseError);
  CHECK_THROWS_AS(parse_term("x01"), ParseError);
  CHECK_THROWS_AS(parse_term("foo"), ParseError);
  CHECK_THROWS_AS(parse_term("x1 x2)"), ParseError);
  CHECK_THROWS_AS(parse_term("(x1"), ParseError);
  CHECK_THROWS_AS(parse_term("\\ x1"), ParseError);
  CHECK_THROWS_AS(parse_term("x1[id"), ParseError);
  // reserved names never start an argument list; this is an application
  CHECK(equal(parse_term("I(x1)"), app(lam(var(1)), var(1))));
  CHECK(equal(parse_term("x1(x2)"), app(var(1), var(2))));
  CHECK_THROWS_AS(parse_term("foo(x1"), ParseError);

  try {
    parse_term("x1 @");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
    CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
  }
}

TEST_CASE("subst grammar") {
  CHECK(equal(parse_subst("id"), subst_id()));
  CHECK(equal(parse_subst("^"), subst_shift()));
  CHECK(equal(parse_subst("x1 . id"), cons(var(1), subst_id())));
  CHECK(equal(parse_subst("x1.id"), cons(var(1), subst_id())));
  CHECK(equal(parse_subst("^ ; ^"), comp(subst_shift(), subst_shift())));
  // cons tails and comp chains extend to the right
  CHECK(equal(parse_subst("x1 . ^ ; ^"), cons(var(1), comp(subst_shift(), subst_shift()))));
  CHECK(equal(parse_subst("^ ; ^ ; ^"),
              comp(subst_shift(), comp(subst_shift(), subst_shift()))));
  CHECK(equal(parse_subst("(^ ; ^) ; ^"),
              comp(comp(subst_shift(), subst_shift()), subst_shift())));
  CHECK(equal(parse_subst("(x1 . id) ; ^"), comp(cons(var(1), subst_id()), subst_shift())));
  CHECK(equal(parse_subst("^ ; x1 . id"), comp(subst_shift(), cons(var(1), subst_id()))));
  // parenthesized terms as cons heads
  CHECK(equal(parse_subst("(x1 x2) . id"), cons(app(var(1), var(2)), subst_id())));
  CHECK(equal(parse_subst("\\. x1 . id"), cons(lam(var(1)), subst_id())));

  CHECK_THROWS_AS(parse_subst("x1"), ParseError);
  CHECK_THROWS_AS(parse_subst("(x1)"), ParseError);
  CHECK_THROWS_AS(parse_subst("x1 . "), ParseError);
}

TEST_CASE("formula grammar") {
  const FormulaPtr p = atom("P", {var(1)});
  const FormulaPtr q = atom("Q", {var(1), var(2)});
  CHECK(equal(parse_formula("false"), falsum()));
  CHECK(equal(parse_formula("P(x1)"), p));
  CHECK(equal(parse_formula("R()"), atom("R", {})));
  CHECK(equal(parse_formula("P(x1) -> Q(x1, x2)"), implies(p, q)));
  // implication is right-associative
  CHECK(equal(parse_formula("P(x1) -> P(x1) -> false"), implies(p, implies(p, falsum()))));
  CHECK(equal(parse_formula("(P(x1) -> P(x1)) -> false"), implies(implies(p, p), falsum())));
  // sugar desugars to the core connectives
  CHECK(equal(parse_formula("~P(x1)"), neg(p)));
  CHECK(equal(parse_formula("P(x1) | Q(x1, x2)"), disj(p, q)));
  CHECK(equal(parse_formula("P(x1) & Q(x1, x2)"), conj(p, q)));
  CHECK(equal(parse_formula("exists. P(x1)"), exists(p)));
  CHECK(equal(parse_formula("exists x2. P(x1)"), exists_xi(2, p)));
  // binder scope extends maximally right
  CHECK(equal(parse_formula("exists. P(x1) -> false"), exists(implies(p, falsum()))));
  CHECK(equal(parse_formula("(exists. P(x1)) -> false"), implies(exists(p), falsum())));
  CHECK(equal(parse_formula("P(x1)[^]"), subf(p, subst_shift())));
  CHECK(equal(parse_formula("(exists. P(x1))[^]"), subf(exists(p), subst_shift())));

  CHECK_THROWS_AS(parse_formula("P"), ParseError);
  CHECK_THROWS_AS(parse_formula("exists(x1)"), ParseError);
  CHECK_THROWS_AS(parse_formula("false(x1)"), ParseError);
  CHECK_THROWS_AS(parse_formula("x1(x2)"), ParseError); // reserved predicate name
  CHECK_THROWS_AS(parse_formula("P(x1) ->"), ParseError);
}

TEST_CASE("precedence of the connective sugar") {
  const FormulaPtr p = atom("P", {var(1)});
  const FormulaPtr q = atom("Q", {var(1)});
  const FormulaPtr r = atom("R", {var(1)});
  // ~ binds tighter than &, & tighter than |, | tighter than ->
  CHECK(equal(parse_formula("~P(x1) & Q(x1)"), conj(neg(p), q)));
  CHECK(equal(parse_formula("P(x1) | Q(x1) & R(x1)"), disj(p, conj(q, r))));
  CHECK(equal(parse_formula("P(x1) | Q(x1) -> R(x1)"), implies(disj(p, q), r)));
}

TEST_CASE("printer emits the grammar exactly") {
  CHECK(print_term(app(app(var(1), var(2)), var(3))) == "x1 x2 x3");
  CHECK(print_term(app(var(1), app(var(2), var(3)))) == "x1 (x2 x3)");
  CHECK(print_term(lam(app(var(1), var(2)))) == "\\. x1 x2");
  CHECK(print_term(app(lam(var(1)), var(2))) == "(\\. x1) x2");
  CHECK(print_term(closure(app(var(1), var(2)), subst_shift())) == "(x1 x2)[^]");
  CHECK(print_term(fun_app("f", {var(1), var(2)})) == "f(x1, x2)");
  CHECK(print_subst(cons(var(1), comp(subst_shift(), subst_shift()))) == "x1 . ^ ; ^");
  CHECK(print_subst(comp(cons(var(1), subst_id()), subst_shift())) == "(x1 . id) ; ^");
  CHECK(print_formula(implies(exists(atom("P", {var(1)})), falsum())) ==
        "(exists. P(x1)) -> false");
  CHECK(print_formula(subf(atom("P", {var(1)}), subst_shift())) == "P(x1)[^]");
  CHECK(print_named(parse_named("\\x. x (\\y. y x)")) == "\\x. x (\\y. y x)");
}

TEST_CASE("round trips on random syntax") {
  std::mt19937_64 rng(59);
  Signature sig;
  sig.functions["f"] = 2;
  sig.functions["c"] = 0;
  sig.predicates["P"] = 1;
  sig.predicates["Q"] = 2;

  TermGenConfig terms;
  terms.max_depth = 6;
  terms.sig = &sig;
  FormulaGenConfig formulas;
  formulas.sig = &sig;
  formulas.allow_subf = true;

  for (int i = 0; i < 800; ++i) {
    const TermPtr t = random_term(rng, terms);
    CHECK(equal(parse_term(print_term(t)), t));
    const SubstPtr u = random_subst(rng, terms);
    CHECK(equal(parse_subst(print_subst(u)), u));
    const FormulaPtr f = random_formula(rng, formulas);
    CHECK(equal(parse_formula(print_formula(f)), f));
    const NamedPtr n = from_debruijn(random_pure_term(rng, 14, 4));
    CHECK(equal(parse_named(print_named(n)), n));
  }
}
