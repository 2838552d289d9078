#include "genoid/formula.hpp"

#include <algorithm>

namespace genoid {

namespace {

template <class Node>
FormulaPtr mk(Node node) {
  return std::make_shared<const Formula>(Formula{std::move(node)});
}

} // namespace

FormulaPtr atom(std::string sym, std::vector<TermPtr> args) {
  if (sym.empty()) throw DomainError("predicate symbol must be nonempty");
  if (reserved_symbol(sym))
    throw DomainError("'" + sym + "' is reserved and cannot be a predicate symbol");
  return mk(Atom{std::move(sym), std::move(args)});
}

FormulaPtr falsum() {
  static const FormulaPtr instance = mk(Falsum{});
  return instance;
}

FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) {
  return mk(Implies{std::move(lhs), std::move(rhs)});
}

FormulaPtr exists(FormulaPtr body) { return mk(Exists{std::move(body)}); }

FormulaPtr subf(FormulaPtr body, SubstPtr subst) {
  return mk(SubF{std::move(body), std::move(subst)});
}

FormulaPtr neg(FormulaPtr f) { return implies(std::move(f), falsum()); }
FormulaPtr verum() { return neg(falsum()); }
FormulaPtr disj(FormulaPtr lhs, FormulaPtr rhs) { return implies(neg(std::move(lhs)), std::move(rhs)); }
FormulaPtr conj(FormulaPtr lhs, FormulaPtr rhs) {
  return neg(implies(std::move(lhs), neg(std::move(rhs))));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Atom& x) {
            const auto& y = std::get<Atom>(b->node);
            if (x.sym != y.sym || x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i)
              if (!equal(x.args[i], y.args[i])) return false;
            return true;
          },
          [&](const Falsum&) { return true; },
          [&](const Implies& x) {
            const auto& y = std::get<Implies>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const Exists& x) { return equal(x.body, std::get<Exists>(b->node).body); },
          [&](const SubF& x) {
            const auto& y = std::get<SubF>(b->node);
            return equal(x.body, y.body) && equal(x.subst, y.subst);
          },
      },
      a->node);
}

FormulaPtr subst_formula(const FormulaPtr& f, const SubstPtr& u) {
  return std::visit(
      overloaded{
          [&](const Atom& n) -> FormulaPtr {
            std::vector<TermPtr> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(norm_term(closure(a, u)));
            return atom(n.sym, std::move(args));
          },
          [&](const Falsum&) -> FormulaPtr { return falsum(); },
          [&](const Implies& n) -> FormulaPtr {
            return implies(subst_formula(n.lhs, u), subst_formula(n.rhs, u));
          },
          [&](const Exists& n) -> FormulaPtr {
            // ∃ is a homomorphism from the exponent act: lift by [x1, u ; ^].
            return exists(subst_formula(n.body, cons(var(1), comp(u, subst_shift()))));
          },
          [&](const SubF& n) -> FormulaPtr {
            return subst_formula(n.body, comp(n.subst, u));
          },
      },
      f->node);
}

FormulaPtr normalize_formula(const FormulaPtr& f) {
  if (sigma_normal(f)) return f;
  return subst_formula(f, subst_id());
}

bool sigma_normal(const FormulaPtr& f) {
  return std::visit(
      overloaded{
          [&](const Atom& n) {
            for (const auto& a : n.args)
              if (!sigma_normal(a)) return false;
            return true;
          },
          [&](const Falsum&) { return true; },
          [&](const Implies& n) { return sigma_normal(n.lhs) && sigma_normal(n.rhs); },
          [&](const Exists& n) { return sigma_normal(n.body); },
          [&](const SubF&) { return false; },
      },
      f->node);
}

int formula_rank(const FormulaPtr& f) {
  return std::visit(
      overloaded{
          [&](const Atom& n) {
            int r = 0;
            for (const auto& a : n.args) r = std::max(r, finite_rank(a));
            return r;
          },
          [&](const Falsum&) { return 0; },
          [&](const Implies& n) {
            return std::max(formula_rank(n.lhs), formula_rank(n.rhs));
          },
          [&](const Exists& n) { return std::max(formula_rank(n.body) - 1, 0); },
          [&](const SubF&) { return formula_rank(normalize_formula(f)); },
      },
      f->node);
}

namespace {

// Assignment extended on the left by a stack of quantified elements;
// coordinate 1 is the innermost quantifier slot. Inline storage keeps the
// per-evaluation cost allocation-free for realistic nesting depths.
struct EnvView {
  static constexpr int kInline = 16;

  const Assignment* base;
  int inline_stack[kInline];
  int depth = 0;
  std::vector<int> overflow;

  void push(int a) {
    if (depth < kInline)
      inline_stack[depth] = a;
    else
      overflow.push_back(a);
    ++depth;
  }
  void set_top(int a) {
    if (depth <= kInline)
      inline_stack[depth - 1] = a;
    else
      overflow.back() = a;
  }
  void pop() {
    --depth;
    if (depth >= kInline) overflow.pop_back();
  }
  int at(int i) const {
    if (i <= depth) {
      const int pos = depth - i;
      return pos < kInline ? inline_stack[pos]
                           : overflow[static_cast<std::size_t>(pos - kInline)];
    }
    return base->at(i - depth);
  }
};

int eval_fo_term(const TermPtr& t, const Structure& m, const EnvView& env) {
  return std::visit(
      overloaded{
          [&](const Var& v) {
            const int value = env.at(v.index);
            if (value < 0 || value >= m.carrier)
              throw DomainError("assignment value outside carrier");
            return value;
          },
          [&](const FunApp& n) {
            const auto it = m.functions.find(n.sym);
            if (it == m.functions.end())
              throw DomainError("unknown function symbol '" + n.sym + "'");
            if (it->second.arity != static_cast<int>(n.args.size()))
              throw DomainError("arity mismatch for function '" + n.sym + "'");
            std::size_t cell = 0;
            for (const auto& a : n.args)
              cell = cell * static_cast<std::size_t>(m.carrier) +
                     static_cast<std::size_t>(eval_fo_term(a, m, env));
            return it->second.values[cell];
          },
          [&](const auto&) -> int {
            throw DomainError("formula arguments must be first-order terms");
          },
      },
      t->node);
}

bool eval_rec(const FormulaPtr& f, const Structure& m, EnvView& env) {
  return std::visit(
      overloaded{
          [&](const Atom& n) {
            const auto it = m.predicates.find(n.sym);
            if (it == m.predicates.end())
              throw DomainError("unknown predicate symbol '" + n.sym + "'");
            if (it->second.arity != static_cast<int>(n.args.size()))
              throw DomainError("arity mismatch for predicate '" + n.sym + "'");
            std::size_t cell = 0;
            for (const auto& a : n.args)
              cell = cell * static_cast<std::size_t>(m.carrier) +
                     static_cast<std::size_t>(eval_fo_term(a, m, env));
            return static_cast<bool>(it->second.truth[cell]);
          },
          [&](const Falsum&) { return false; },
          [&](const Implies& n) { return !eval_rec(n.lhs, m, env) || eval_rec(n.rhs, m, env); },
          [&](const Exists& n) {
            env.push(0);
            for (int a = 0; a < m.carrier; ++a) {
              env.set_top(a);
              if (eval_rec(n.body, m, env)) {
                env.pop();
                return true;
              }
            }
            env.pop();
            return false;
          },
          [&](const SubF&) -> bool {
            throw DomainError("eval_rec expects a sigma-normal formula");
          },
      },
      f->node);
}

} // namespace

bool eval_formula(const FormulaPtr& f, const Structure& m, const Assignment& env) {
  FormulaPtr normal = normalize_formula(f);
  EnvView view{&env, {}, 0, {}};
  return eval_rec(normal, m, view);
}

bool eval_formula_normal(const FormulaPtr& f, const Structure& m, const Assignment& env) {
  EnvView view{&env, {}, 0, {}};
  return eval_rec(f, m, view);
}

FormulaPtr exists_xi(int i, const FormulaPtr& f) {
  if (i < 1) throw DomainError("exists_xi index must be >= 1");
  std::vector<TermPtr> heads;
  heads.reserve(static_cast<std::size_t>(i));
  for (int j = 2; j <= i; ++j) heads.push_back(var(j));
  heads.push_back(var(1));
  return exists(subst_formula(f, cons_list(heads, shift_n(i + 1))));
}

namespace {

void collect_subst_symbols(const SubstPtr& u, Signature& sig);

void collect_term_symbols(const TermPtr& t, Signature& sig) {
  std::visit(
      overloaded{
          [&](const Var&) {},
          [&](const App& n) {
            collect_term_symbols(n.fn, sig);
            collect_term_symbols(n.arg, sig);
          },
          [&](const Lam& n) { collect_term_symbols(n.body, sig); },
          [&](const FunApp& n) {
            const int arity = static_cast<int>(n.args.size());
            auto [it, fresh] = sig.functions.emplace(n.sym, arity);
            if (!fresh && it->second != arity)
              throw DomainError("function '" + n.sym + "' used with conflicting arities");
            for (const auto& a : n.args) collect_term_symbols(a, sig);
          },
          [&](const Closure& n) {
            collect_term_symbols(n.body, sig);
            collect_subst_symbols(n.subst, sig);
          },
      },
      t->node);
}

void collect_subst_symbols(const SubstPtr& u, Signature& sig) {
  std::visit(
      overloaded{
          [&](const Id&) {},
          [&](const Shift&) {},
          [&](const Cons& n) {
            collect_term_symbols(n.head, sig);
            collect_subst_symbols(n.tail, sig);
          },
          [&](const Comp& n) {
            collect_subst_symbols(n.first, sig);
            collect_subst_symbols(n.second, sig);
          },
      },
      u->node);
}

void collect_formula_symbols(const FormulaPtr& f, Signature& sig) {
  std::visit(
      overloaded{
          [&](const Atom& n) {
            const int arity = static_cast<int>(n.args.size());
            auto [it, fresh] = sig.predicates.emplace(n.sym, arity);
            if (!fresh && it->second != arity)
              throw DomainError("predicate '" + n.sym + "' used with conflicting arities");
            for (const auto& a : n.args) collect_term_symbols(a, sig);
          },
          [&](const Falsum&) {},
          [&](const Implies& n) {
            collect_formula_symbols(n.lhs, sig);
            collect_formula_symbols(n.rhs, sig);
          },
          [&](const Exists& n) { collect_formula_symbols(n.body, sig); },
          [&](const SubF& n) {
            collect_formula_symbols(n.body, sig);
            collect_subst_symbols(n.subst, sig);
          },
      },
      f->node);
}

} // namespace

Signature signature_of(const FormulaPtr& f) {
  Signature sig;
  collect_formula_symbols(f, sig);
  validate_signature(sig);
  return sig;
}

} // namespace genoid
