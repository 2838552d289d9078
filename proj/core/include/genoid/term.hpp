#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "genoid/errors.hpp"

namespace genoid {

struct Term;
struct Subst;

using TermPtr = std::shared_ptr<const Term>;
using SubstPtr = std::shared_ptr<const Subst>;

// Term nodes. The distinguished generator x is Var{1}; Var{i} abbreviates
// the i-1-fold shift closure of it.
struct Var {
  int index; // >= 1
};
struct App {
  TermPtr fn;
  TermPtr arg;
};
struct Lam {
  TermPtr body;
};
struct FunApp {
  std::string sym;
  std::vector<TermPtr> args;
};
// Explicit closure t[u]: the right action of a substitution on a term,
// kept as syntax until a normalizer pushes it through.
struct Closure {
  TermPtr body;
  SubstPtr subst;
};

struct Term {
  std::variant<Var, App, Lam, FunApp, Closure> node;
};

// Substitution nodes. Cons is the pairing [head, tail]; Comp is the monoid
// product in diagrammatic order (apply `first`, then `second`).
struct Id {};
struct Shift {};
struct Cons {
  TermPtr head;
  SubstPtr tail;
};
struct Comp {
  SubstPtr first;
  SubstPtr second;
};

struct Subst {
  std::variant<Id, Shift, Cons, Comp> node;
};

// Visitor helper.
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Constructors. All values are immutable once built and freely shareable.
TermPtr var(int index);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr lam(TermPtr body);
TermPtr fun_app(std::string sym, std::vector<TermPtr> args);
TermPtr closure(TermPtr body, SubstPtr subst);

/// Names that cannot be function or predicate symbols: the xN variable
/// family, the combinator sugar I/K/S, and the keywords id, false, exists.
bool reserved_symbol(const std::string& name);

SubstPtr subst_id();
SubstPtr subst_shift();
SubstPtr cons(TermPtr head, SubstPtr tail);
SubstPtr comp(SubstPtr first, SubstPtr second);

/// Shift^n: Id for n = 0, Shift for n = 1, right-nested Comp otherwise.
SubstPtr shift_n(int n);

/// [t1, ..., tk, tail] as a right-nested Cons chain.
SubstPtr cons_list(const std::vector<TermPtr>& heads, SubstPtr tail);

// Structural equality (Var{i} compares by index, children recursively).
bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const SubstPtr& a, const SubstPtr& b);

/// True iff the term contains no Closure node anywhere.
bool sigma_normal(const TermPtr& t);
/// True iff the substitution is a Cons-list of σ-normal terms over Shift^n.
bool sigma_normal(const SubstPtr& u);

} // namespace genoid
