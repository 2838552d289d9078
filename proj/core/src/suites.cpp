#include "genoid/suites.hpp"

#include <chrono>
#include <sstream>

#include "genoid/clone.hpp"
#include "genoid/formula.hpp"
#include "genoid/lambda.hpp"
#include "genoid/named.hpp"
#include "genoid/parser.hpp"
#include "genoid/printer.hpp"
#include "genoid/validity.hpp"

namespace genoid {

namespace {

constexpr std::size_t kMaxStoredFailures = 8;

struct Runner {
  SuiteResult result;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Runner(std::string name) { result.name = std::move(name); }

  void fail(std::string message) {
    ++result.failures_total;
    if (result.failures.size() < kMaxStoredFailures)
      result.failures.push_back(std::move(message));
  }

  void check(bool ok, const std::function<std::string()>& message) {
    if (!ok) fail(message());
  }

  SuiteResult finish() {
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(result);
  }
};

// Low budget: the generated candidates are small, so convergent ones finish
// in well under 400 steps and divergent ones get rejected cheaply.
LambdaFlags prenorm_flags() { return {true, true, 400}; }

/// Random pure lambda term already in βη-normal form (redrawn on divergence).
TermPtr random_normal_pure(std::mt19937_64& rng, int max_size, int max_index) {
  for (;;) {
    TermPtr t = random_pure_term(rng, max_size, max_index);
    auto report = beta_eta_normalize(t, prenorm_flags());
    if (report.normal()) return report.result;
  }
}

TermPtr apply_vars_descending(TermPtr base, int n) {
  for (int i = n; i >= 1; --i) base = app(std::move(base), var(i));
  return base;
}

} // namespace

SuiteResult genoid_axiom_suite(std::uint64_t seed, int pairs, const TermNormalizer& normalizer) {
  Runner run("genoid-axioms");
  std::mt19937_64 rng(seed);

  const TermNormalizer norm_fn =
      normalizer ? normalizer
                 : [](const TermPtr& t, std::uint64_t fuel) { return sigma_normalize(t, fuel); };
  const auto nt = [&](const TermPtr& t) {
    auto report = norm_fn(t, kDefaultFuel);
    if (!report.normal()) throw FuelError("term normalization exhausted its budget");
    return report.result;
  };

  TermGenConfig gen;
  gen.max_depth = 8;
  gen.max_index = 6;

  for (int i = 0; i < pairs; ++i) {
    run.result.cases++;
    try {
      const TermPtr a = nt(random_term(rng, gen));
      const TermPtr t = random_term(rng, gen);
      const SubstPtr u = norm_subst(random_subst(rng, gen));
      const SubstPtr v = norm_subst(random_subst(rng, gen));

      // (G1) x [a, u] = a
      run.check(equal(nt(closure(var(1), cons(a, u))), a),
                [&] { return "(G1) failed for a = " + print_term(a); });

      // (G2) ^ ; [a, u] = u
      run.check(equal(norm_subst(comp(subst_shift(), cons(a, u))), u),
                [&] { return "(G2) failed for u = " + print_subst(u); });

      // (G3) [x1 u, ^ ; u] = u
      run.check(
          equal(norm_subst(cons(closure(var(1), u), comp(subst_shift(), u))), u),
          [&] { return "(G3) failed for u = " + print_subst(u); });

      // Unit laws.
      const TermPtr tn = nt(t);
      run.check(equal(nt(closure(t, subst_id())), tn),
                [&] { return "t[id] != t for t = " + print_term(t); });
      run.check(equal(norm_subst(comp(u, subst_id())), u) &&
                    equal(norm_subst(comp(subst_id(), u)), u),
                [&] { return "monoid unit law failed for " + print_subst(u); });

      // Idempotence: normalizing a normal form is the identity.
      run.check(equal(nt(tn), tn),
                [&] { return "normalization not idempotent on " + print_term(tn); });

      // Act law: (t u) v = t (u ; v)
      run.check(equal(nt(closure(closure(t, u), v)), nt(closure(t, comp(u, v)))),
                [&] { return "act law failed for t = " + print_term(t); });

      // Distribution: [a, u] ; v = [a v, u ; v]
      run.check(equal(norm_subst(comp(cons(a, u), v)),
                      norm_subst(cons(closure(a, v), comp(u, v)))),
                [&] { return "distribution failed for a = " + print_term(a); });

      // Extended (G3) for n <= 5.
      const int n = static_cast<int>(rng() % 5) + 1;
      std::vector<TermPtr> heads;
      heads.reserve(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) heads.push_back(closure(var(j), u));
      run.check(equal(norm_subst(cons_list(heads, comp(shift_n(n), u))), u),
                [&] {
                  return "extended (G3) failed at n = " + std::to_string(n) +
                         " for u = " + print_subst(u);
                });
    } catch (const Error& e) {
      run.fail(std::string("exception: ") + e.what());
    }
  }
  return run.finish();
}

SuiteResult monad_suite() {
  Runner run("monad-laws");
  const SubstPtr minus = cons(var(1), subst_id()); // [x, id]
  const auto eq = [&](const SubstPtr& a, const SubstPtr& b, const char* what) {
    run.result.cases++;
    run.check(equal(norm_subst(a), norm_subst(b)), [&] { return std::string(what); });
  };

  eq(comp(subst_shift(), minus), subst_id(), "^ ; - != id");
  eq(comp(delta(subst_shift()), minus), subst_id(), "delta(^) ; - != id");
  eq(comp(minus, minus), comp(delta(minus), minus), "- ; - != delta(-) ; -");
  eq(delta(subst_id()), subst_id(), "delta(id) != id");

  // Kleisli unit behavior.
  std::mt19937_64 rng(kDefaultSeed);
  TermGenConfig gen;
  gen.max_depth = 4;
  for (int i = 0; i < 16; ++i) {
    const SubstPtr v = random_subst(rng, gen);
    eq(kleisli_star(subst_shift(), v), v, "^ * v != v");
    eq(kleisli_star(subst_id(), v), cons(var(1), v), "id * v != [x1, v]");
  }
  return run.finish();
}

SuiteResult combinator_suite(std::uint64_t seed, int triples) {
  Runner run("combinators");
  std::mt19937_64 rng(seed);
  const TermPtr I = combinator("I");
  const TermPtr K = combinator("K");
  const TermPtr S = combinator("S");
  const LambdaFlags flags{true, true, 10'000};

  for (int i = 0; i < triples; ++i) {
    run.result.cases++;
    const TermPtr a = random_normal_pure(rng, 10, 4);
    const TermPtr b = random_normal_pure(rng, 10, 4);
    const TermPtr c = random_normal_pure(rng, 10, 4);

    run.check(equal(beta_eta_nf(app(I, a), flags), a),
              [&] { return "I a != a for a = " + print_term(a); });
    run.check(equal(beta_eta_nf(app(app(K, a), b), flags), a),
              [&] { return "K a b != a for a = " + print_term(a); });

    const auto lhs = beta_eta_normalize(app(app(app(S, a), b), c), flags);
    const auto rhs = beta_eta_normalize(app(app(a, c), app(b, c)), flags);
    if (lhs.normal() != rhs.normal()) {
      run.fail("asymmetric divergence in S a b c for a = " + print_term(a) +
               ", b = " + print_term(b) + ", c = " + print_term(c));
    } else if (lhs.normal()) {
      run.check(equal(lhs.result, rhs.result), [&] {
        return "S a b c != a c (b c) for a = " + print_term(a) + ", b = " + print_term(b) +
               ", c = " + print_term(c);
      });
    }
  }
  return run.finish();
}

SuiteResult lambda_formula_suite(std::uint64_t seed, int samples) {
  Runner run("lambda-formulas");
  std::mt19937_64 rng(seed);
  const LambdaFlags flags{true, true, 2'000};
  TermGenConfig substs;
  substs.max_depth = 3;
  substs.max_index = 4;

  const auto both_or_equal = [&](const TermPtr& lhs, const TermPtr& rhs, const char* what) {
    const auto l = beta_eta_normalize(lhs, flags);
    const auto r = beta_eta_normalize(rhs, flags);
    if (l.normal() != r.normal())
      run.fail(std::string(what) + ": asymmetric divergence on " + print_term(lhs));
    else if (l.normal())
      run.check(equal(l.result, r.result),
                [&] { return std::string(what) + " failed on " + print_term(lhs); });
  };

  for (int i = 0; i < samples; ++i) {
    run.result.cases++;
    const TermPtr a = random_normal_pure(rng, 10, 4);
    const TermPtr b = random_normal_pure(rng, 8, 4);

    // (1) (\a) b = a [b, id]
    both_or_equal(app(lam(a), b), closure(a, cons(b, subst_id())), "formula (1)");

    // (2) ((\a) u) b = a [b, u]
    const SubstPtr u = random_subst(rng, substs);
    both_or_equal(app(closure(lam(a), u), b), closure(a, cons(b, u)), "formula (2)");

    // (3) (\ (a ^)) b = a
    both_or_equal(app(lam(closure(a, subst_shift())), b), a, "formula (3)");

    // (4) ((\^n a) ^^n) x_n ... x_1 = a, arbitrary rank.
    {
      const int n = static_cast<int>(rng() % 4) + 1;
      TermPtr lams = a;
      for (int j = 0; j < n; ++j) lams = lam(std::move(lams));
      both_or_equal(apply_vars_descending(closure(lams, shift_n(n)), n), a, "formula (4)");
    }

    // (5) for rank(a) in 1..4: \^n a is closed and (\^n a) x_n ... x_1 = a,
    // and the substitution form (\^n a) a_n ... a_1 = a [a_1, ..., a_n, id].
    {
      TermPtr c = a;
      int rank = finite_rank(c);
      for (int tries = 0; (rank < 1 || rank > 4) && tries < 64; ++tries) {
        c = random_normal_pure(rng, 10, 4);
        rank = finite_rank(c);
      }
      if (rank >= 1 && rank <= 4) {
        TermPtr lams = c;
        for (int j = 0; j < rank; ++j) lams = lam(std::move(lams));
        run.check(finite_rank(lams) == 0,
                  [&] { return "formula (5): \\^n a not closed for " + print_term(c); });
        both_or_equal(apply_vars_descending(lams, rank), c, "formula (5)");

        std::vector<TermPtr> args;
        args.reserve(static_cast<std::size_t>(rank));
        for (int j = 0; j < rank; ++j) args.push_back(random_normal_pure(rng, 6, 3));
        TermPtr applied = lams;
        for (int j = rank; j >= 1; --j) applied = app(std::move(applied), args[static_cast<std::size_t>(j - 1)]);
        both_or_equal(applied, closure(c, cons_list(args, subst_id())), "formula (5) subst form");

        // (6) through closure_of: the canonical closed witness.
        const ClosureResult closed = closure_of(c);
        run.check(closed.rank == rank && finite_rank(closed.closed) == 0,
                  [&] { return "formula (6): closure_of rank mismatch on " + print_term(c); });
        both_or_equal(apply_vars_descending(closed.closed, rank), c, "formula (6)");
      }
    }

    // η: \. (a ^) x1 = a  (the bound coordinate does not occur in a ^).
    both_or_equal(lam(app(closure(a, subst_shift()), var(1))), a, "eta soundness");
  }
  return run.finish();
}

SuiteResult oracle_differential_suite(std::uint64_t seed, int terms) {
  Runner run("oracle-differential");
  std::mt19937_64 rng(seed);
  const std::uint64_t fuel = 600;
  const LambdaFlags flags{true, false, fuel}; // β only; the oracle has no η

  int convergent = 0;
  long attempts = 0;
  const long max_attempts = 80L * terms;
  while (convergent < terms && attempts < max_attempts) {
    ++attempts;
    const TermPtr t = random_pure_term(rng, 30, 3);
    const auto oracle = oracle_normalize(from_debruijn(t), fuel);
    const auto engine = beta_eta_normalize(t, flags);
    if (!oracle.normal() && !engine.normal()) continue; // divergent in both: excluded
    run.result.cases++;
    if (oracle.normal() != engine.normal()) {
      run.fail("asymmetric convergence on " + print_term(t));
      ++convergent;
      continue;
    }
    ++convergent;
    run.check(equal(to_debruijn(oracle.result), engine.result) &&
                  alpha_equal(oracle.result, from_debruijn(engine.result)),
              [&] {
                return "normal forms disagree on " + print_term(t) + ": oracle " +
                       print_named(oracle.result) + ", engine " + print_term(engine.result);
              });
  }
  if (convergent < terms)
    run.fail("could not collect enough convergent samples (" + std::to_string(convergent) +
             " of " + std::to_string(terms) + ")");
  return run.finish();
}

SuiteResult rank_law_suite(std::uint64_t seed, int samples) {
  Runner run("rank-laws");
  std::mt19937_64 rng(seed);
  TermGenConfig gen;
  gen.max_depth = 6;
  gen.max_index = 5;

  for (int i = 0; i < samples; ++i) {
    run.result.cases++;
    try {
      const TermPtr t = norm_term(random_term(rng, gen));
      const int rank = finite_rank(t);

      // Binding decrements the rank.
      run.check(finite_rank(lam(t)) == std::max(rank - 1, 0),
                [&] { return "rank decrement failed on " + print_term(t); });

      // Agreement on the first `rank` coordinates is all that matters.
      std::vector<TermPtr> shared;
      shared.reserve(static_cast<std::size_t>(rank));
      for (int j = 0; j < rank; ++j) shared.push_back(norm_term(random_term(rng, gen)));
      const SubstPtr u = norm_subst(cons_list(shared, random_subst(rng, gen)));
      const SubstPtr v = norm_subst(cons_list(shared, random_subst(rng, gen)));
      run.check(equal(norm_term(closure(t, u)), norm_term(closure(t, v))),
                [&] { return "rank soundness failed on " + print_term(t); });

      // Closed terms are stable under every substitution.
      if (rank == 0)
        run.check(equal(norm_term(closure(t, u)), t),
                  [&] { return "closed-term stability failed on " + print_term(t); });

      // Idx(i) is the i-1-fold shift closure of x.
      const int idx = static_cast<int>(rng() % 6) + 1;
      run.check(equal(norm_term(closure(var(1), shift_n(idx - 1))), var(idx)),
                [&] { return "x[^^(i-1)] != x_i at i = " + std::to_string(idx); });
    } catch (const Error& e) {
      run.fail(std::string("exception: ") + e.what());
    }
  }
  return run.finish();
}

SuiteResult clone_suite(std::uint64_t seed, int terms) {
  Runner run("clone-left-algebra");
  std::mt19937_64 rng(seed);
  Signature sig;
  sig.functions["f"] = 2;

  // All structures with carrier <= 2 for the binary-function signature.
  std::vector<Structure> structures;
  for (int n = 1; n <= 2; ++n)
    for_each_structure(sig, n, [&](const Structure& m) {
      structures.push_back(m);
      return true;
    });

  FirstOrderGenConfig gen;
  gen.sig = &sig;
  gen.max_depth = 3;
  gen.max_index = 4;

  for (int i = 0; i < terms; ++i) {
    run.result.cases++;
    try {
      const Structure& m = structures[static_cast<std::size_t>(i) % structures.size()];
      const Assignment env = random_assignment(rng, m.carrier, 6);

      // Projection axiom.
      const int index = static_cast<int>(rng() % 6) + 1;
      run.check(eval_term(var(index), m, env) == env.at(index),
                [&] { return "projection failed at x" + std::to_string(index); });

      // Composition axiom / substitution lemma.
      const TermPtr a = random_first_order_term(rng, gen);
      FinitarySequence s;
      for (int j = 0; j < 5; ++j) s.prefix.push_back(random_first_order_term(rng, gen));
      s.tail = subst_id();

      const int lhs = eval_term(clone_apply(a, s), m, env);
      Assignment composed;
      for (int j = 1; j <= 8; ++j)
        composed.values.push_back(eval_term(s.coordinate(j), m, env));
      composed.pad = env.pad;
      const int rhs = eval_term(norm_term(a), m, composed);
      run.check(lhs == rhs, [&] {
        return "composition axiom failed for " + print_term(a) + " in structure\n" +
               print_structure(m);
      });

      // clone_apply is independent of padding past the rank.
      FinitarySequence padded = s;
      padded.prefix.push_back(random_first_order_term(rng, gen));
      padded.prefix.push_back(random_first_order_term(rng, gen));
      run.check(equal(clone_apply(a, s), clone_apply(a, padded)),
                [&] { return "clone_apply depends on padding for " + print_term(a); });

      // Sequence monoid: unit laws and associativity on the first 5 coordinates.
      FinitarySequence t1, t2;
      for (int j = 0; j < 2; ++j) {
        t1.prefix.push_back(random_first_order_term(rng, gen));
        t2.prefix.push_back(random_first_order_term(rng, gen));
      }
      t1.tail = shift_n(static_cast<int>(rng() % 3));
      t2.tail = shift_n(static_cast<int>(rng() % 3));

      const FinitarySequence unit = FinitarySequence::unit();
      run.check(equal(norm_subst(seq_compose(unit, t1).as_subst()),
                      norm_subst(t1.as_subst())) &&
                    equal(norm_subst(seq_compose(t1, unit).as_subst()),
                          norm_subst(t1.as_subst())),
                [&] { return "sequence unit laws failed"; });

      const FinitarySequence left = seq_compose(seq_compose(s, t1), t2);
      const FinitarySequence right = seq_compose(s, seq_compose(t1, t2));
      for (int j = 1; j <= 5; ++j)
        run.check(equal(left.coordinate(j), right.coordinate(j)),
                  [&] { return "sequence composition not associative at coordinate " +
                               std::to_string(j); });
    } catch (const Error& e) {
      run.fail(std::string("exception: ") + e.what());
    }
  }
  return run.finish();
}

SuiteResult quantifier_suite(std::uint64_t seed, int formulas) {
  Runner run("quantifier-algebra");
  std::mt19937_64 rng(seed);
  Signature sig;
  sig.predicates["P"] = 1;
  sig.predicates["Q"] = 2;

  FormulaGenConfig gen;
  gen.sig = &sig;
  gen.max_depth = 5;
  gen.max_index = 2;
  gen.allow_subf = true;

  struct Sample {
    FormulaPtr p, q;
    FormulaPtr or_pq, and_pq, not_p;
    FormulaPtr ex_or, or_ex; // ∃(p ∨ q) and ∃p ∨ ∃q
    FormulaPtr shifted_ex_p; // (∃p) ^
    int rank = 0;
  };

  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(formulas));
  for (int i = 0; i < formulas; ++i) {
    Sample s;
    s.p = normalize_formula(random_formula(rng, gen));
    s.q = normalize_formula(random_formula(rng, gen));
    s.or_pq = normalize_formula(disj(s.p, s.q));
    s.and_pq = normalize_formula(conj(s.p, s.q));
    s.not_p = normalize_formula(neg(s.p));
    s.ex_or = normalize_formula(exists(disj(s.p, s.q)));
    s.or_ex = normalize_formula(disj(exists(s.p), exists(s.q)));
    s.shifted_ex_p = normalize_formula(subf(exists(s.p), subst_shift()));
    for (const auto& f : {s.or_pq, s.and_pq, s.ex_or, s.or_ex, s.shifted_ex_p})
      s.rank = std::max(s.rank, formula_rank(f));
    samples.push_back(std::move(s));
  }
  run.result.cases = formulas;

  for (int n = 1; n <= 3; ++n) {
    for_each_structure(sig, n, [&](const Structure& m) {
      for (const auto& s : samples) {
        Assignment env;
        env.values.assign(static_cast<std::size_t>(s.rank), 0);
        env.pad = 0;
        do {
          const bool bp = eval_formula_normal(s.p, m, env);
          const bool bq = eval_formula_normal(s.q, m, env);
          // (i) the derived connectives are Boolean, pointwise.
          if (eval_formula_normal(s.or_pq, m, env) != (bp || bq) ||
              eval_formula_normal(s.and_pq, m, env) != (bp && bq) ||
              eval_formula_normal(s.not_p, m, env) != !bp) {
            run.fail("Boolean laws failed for p = " + print_formula(s.p) +
                     ", q = " + print_formula(s.q));
            break;
          }
          // (ii) ∃ distributes over ∨.
          if (eval_formula_normal(s.ex_or, m, env) != eval_formula_normal(s.or_ex, m, env)) {
            run.fail("axiom (ii) failed for p = " + print_formula(s.p) +
                     ", q = " + print_formula(s.q));
            break;
          }
          // (iii) p entails (∃p) shifted.
          if (bp && !eval_formula_normal(s.shifted_ex_p, m, env)) {
            run.fail("axiom (iii) failed for p = " + print_formula(s.p));
            break;
          }
        } while (next_assignment(env, n));
      }
      return run.result.failures_total == 0;
    });
  }
  return run.finish();
}

SuiteResult validity_suite() {
  Runner run("validity-checker");
  const ValidityOptions at3{3, 10'000'000};
  const ValidityOptions at2{2, 10'000'000};
  const FormulaPtr p1 = atom("P", {var(1)});
  const FormulaPtr q1 = atom("Q", {var(1)});

  const auto expect_valid = [&](const FormulaPtr& f, const ValidityOptions& opts,
                                const char* what) {
    run.result.cases++;
    try {
      const Verdict v = check_validity(f, opts);
      run.check(!v.invalid(), [&] {
        return std::string(what) + " reported invalid: " + print_formula(f);
      });
    } catch (const Error& e) {
      run.fail(std::string(what) + " raised: " + e.what());
    }
  };
  const auto expect_invalid = [&](const FormulaPtr& f, const ValidityOptions& opts,
                                  int max_counter_carrier, const char* what) {
    run.result.cases++;
    try {
      const Verdict v = check_validity(f, opts);
      if (!v.invalid() || !v.counterexample) {
        run.fail(std::string(what) + " reported valid: " + print_formula(f));
        return;
      }
      const auto& ce = *v.counterexample;
      run.check(ce.structure.carrier <= max_counter_carrier,
                [&] { return std::string(what) + ": counterexample larger than expected"; });
      // Replay: the counterexample must falsify the formula.
      run.check(!eval_formula(f, ce.structure, ce.assignment),
                [&] { return std::string(what) + ": counterexample does not replay"; });
      // And survive a round trip through the text format.
      const Structure reparsed = parse_structure(print_structure(ce.structure));
      run.check(!eval_formula(f, reparsed, ce.assignment),
                [&] { return std::string(what) + ": counterexample lost in the text format"; });
    } catch (const Error& e) {
      run.fail(std::string(what) + " raised: " + e.what());
    }
  };

  expect_valid(implies(p1, p1), at3, "p -> p");
  expect_valid(implies(implies(implies(p1, q1), p1), p1), at3, "Peirce's law");
  expect_valid(implies(p1, subf(exists(p1), subst_shift())), at3, "axiom (iii) unary");
  {
    const FormulaPtr q2 = atom("Q", {var(1), var(2)});
    expect_valid(implies(q2, subf(exists(q2), subst_shift())), at3, "axiom (iii) binary");
  }
  expect_valid(implies(exists(disj(p1, q1)), disj(exists(p1), exists(q1))), at3,
               "exists over or, forward");
  expect_valid(implies(disj(exists(p1), exists(q1)), exists(disj(p1, q1))), at3,
               "exists over or, backward");

  expect_invalid(implies(subf(exists(p1), subst_shift()), p1), at2, 2, "converse of (iii)");
  expect_invalid(implies(conj(exists(p1), exists(q1)), exists(conj(p1, q1))), at2, 2,
                 "exists over and");

  // Equivalences.
  run.result.cases++;
  run.check(!check_equivalence(exists(disj(p1, q1)), disj(exists(p1), exists(q1)), at3).invalid(),
            [&] { return std::string("axiom (ii) equivalence reported invalid"); });
  run.result.cases++;
  run.check(!check_equivalence(neg(neg(p1)), p1, at3).invalid(),
            [&] { return std::string("double negation equivalence reported invalid"); });
  run.result.cases++;
  run.check(!check_equivalence(exists_xi(2, p1), p1, at3).invalid(),
            [&] { return std::string("vacuous exists x2 not equivalent"); });
  run.result.cases++;
  run.check(!check_equivalence(exists_xi(1, p1), subf(exists(p1), subst_shift()), at3).invalid(),
            [&] { return std::string("exists x1 != shifted raw exists"); });
  return run.finish();
}

SuiteResult parser_roundtrip_suite(std::uint64_t seed, int samples) {
  Runner run("parser-roundtrips");
  std::mt19937_64 rng(seed);

  Signature sig;
  sig.functions["f"] = 2;
  sig.functions["g"] = 1;
  sig.functions["c"] = 0;
  sig.predicates["P"] = 1;
  sig.predicates["Q"] = 2;

  TermGenConfig terms;
  terms.max_depth = 6;
  terms.max_index = 6;
  terms.sig = &sig;

  FormulaGenConfig formulas;
  formulas.sig = &sig;
  formulas.max_depth = 5;
  formulas.allow_subf = true;

  for (int i = 0; i < samples; ++i) {
    run.result.cases++;
    try {
      const TermPtr t = random_term(rng, terms);
      run.check(equal(parse_term(print_term(t)), t),
                [&] { return "term round trip failed: " + print_term(t); });

      const SubstPtr u = random_subst(rng, terms);
      run.check(equal(parse_subst(print_subst(u)), u),
                [&] { return "subst round trip failed: " + print_subst(u); });

      const TermPtr pure = random_pure_term(rng, 16, 4);
      const NamedPtr named = from_debruijn(pure);
      run.check(equal(parse_named(print_named(named)), named),
                [&] { return "named round trip failed: " + print_named(named); });
      run.check(equal(to_debruijn(named), pure),
                [&] { return "bridge round trip failed: " + print_term(pure); });

      const FormulaPtr f = random_formula(rng, formulas);
      run.check(equal(parse_formula(print_formula(f)), f),
                [&] { return "formula round trip failed: " + print_formula(f); });
    } catch (const Error& e) {
      run.fail(std::string("exception: ") + e.what());
    }
  }
  return run.finish();
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, bool quick) {
  const auto scaled = [&](int full) { return quick ? std::max(full / 20, 25) : full; };
  std::vector<SuiteResult> results;
  results.push_back(genoid_axiom_suite(seed, scaled(10'000)));
  results.push_back(monad_suite());
  results.push_back(combinator_suite(seed, scaled(1'000)));
  results.push_back(lambda_formula_suite(seed, scaled(1'000)));
  results.push_back(oracle_differential_suite(seed, scaled(1'000)));
  results.push_back(rank_law_suite(seed, scaled(2'000)));
  results.push_back(clone_suite(seed, scaled(500)));
  results.push_back(quantifier_suite(seed, scaled(500)));
  results.push_back(validity_suite());
  results.push_back(parser_roundtrip_suite(seed, scaled(5'000)));
  return results;
}

} // namespace genoid
