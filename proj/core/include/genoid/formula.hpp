#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "genoid/clone.hpp"
#include "genoid/term.hpp"

namespace genoid {

// Predicate-algebra elements over the term language. Core constructors
// only; negation, disjunction, conjunction and truth are derived builders.

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Atom {
  std::string sym;
  std::vector<TermPtr> args;
};
struct Falsum {};
struct Implies {
  FormulaPtr lhs;
  FormulaPtr rhs;
};
// The raw binder: quantifies a fresh first coordinate prepended to the
// assignment. The familiar ∃x_i is the derived exists_xi below.
struct Exists {
  FormulaPtr body;
};
struct SubF {
  FormulaPtr body;
  SubstPtr subst;
};

struct Formula {
  std::variant<Atom, Falsum, Implies, Exists, SubF> node;
};

FormulaPtr atom(std::string sym, std::vector<TermPtr> args);
FormulaPtr falsum();
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr exists(FormulaPtr body);
FormulaPtr subf(FormulaPtr body, SubstPtr subst);

// Derived connectives.
FormulaPtr neg(FormulaPtr f);
FormulaPtr verum();
FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

/// Pushes the substitution through the formula; the result is σ-normal
/// (no SubF nodes, atom arguments σ-normal). ∃ lifts the substitution by
/// [x1, u ; Shift], implication and atoms distribute.
FormulaPtr subst_formula(const FormulaPtr& f, const SubstPtr& u);

/// σ-normal form of the formula itself.
FormulaPtr normalize_formula(const FormulaPtr& f);

/// No SubF nodes and all atom arguments σ-normal.
bool sigma_normal(const FormulaPtr& f);

/// Largest assignment coordinate the formula can read; Exists decrements
/// escaping indices, sentences have rank 0.
int formula_rank(const FormulaPtr& f);

/// Finite-model truth. Exists(b) holds iff some carrier element a makes b
/// true at the cons-extended assignment (a, env1, env2, ...).
bool eval_formula(const FormulaPtr& f, const Structure& m, const Assignment& env);

/// As eval_formula, but the caller guarantees sigma_normal(f); skips the
/// normalization pass, for callers evaluating one formula many times.
bool eval_formula_normal(const FormulaPtr& f, const Structure& m, const Assignment& env);

/// The classical binder ∃x_i, recovered from the raw binder by a
/// coordinate-permuting substitution.
FormulaPtr exists_xi(int i, const FormulaPtr& f);

/// Function and predicate symbols occurring in the formula, with arity
/// consistency checked.
Signature signature_of(const FormulaPtr& f);

} // namespace genoid
