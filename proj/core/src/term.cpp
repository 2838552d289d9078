#include "genoid/term.hpp"

namespace genoid {

namespace {

template <class Node>
TermPtr mk_term(Node node) {
  return std::make_shared<const Term>(Term{std::move(node)});
}

template <class Node>
SubstPtr mk_subst(Node node) {
  return std::make_shared<const Subst>(Subst{std::move(node)});
}

} // namespace

TermPtr var(int index) {
  if (index < 1) throw DomainError("variable index must be >= 1, got " + std::to_string(index));
  return mk_term(Var{index});
}

TermPtr app(TermPtr fn, TermPtr arg) { return mk_term(App{std::move(fn), std::move(arg)}); }

TermPtr lam(TermPtr body) { return mk_term(Lam{std::move(body)}); }

bool reserved_symbol(const std::string& name) {
  if (name == "I" || name == "K" || name == "S") return true;
  if (name == "id" || name == "false" || name == "exists") return true;
  if (name.size() >= 2 && name[0] == 'x' && name[1] != '0') {
    for (std::size_t i = 1; i < name.size(); ++i)
      if (name[i] < '0' || name[i] > '9') return false;
    return true;
  }
  return false;
}

TermPtr fun_app(std::string sym, std::vector<TermPtr> args) {
  if (sym.empty()) throw DomainError("function symbol must be nonempty");
  if (reserved_symbol(sym))
    throw DomainError("'" + sym + "' is reserved and cannot be a function symbol");
  return mk_term(FunApp{std::move(sym), std::move(args)});
}

TermPtr closure(TermPtr body, SubstPtr subst) {
  return mk_term(Closure{std::move(body), std::move(subst)});
}

SubstPtr subst_id() {
  static const SubstPtr instance = mk_subst(Id{});
  return instance;
}

SubstPtr subst_shift() {
  static const SubstPtr instance = mk_subst(Shift{});
  return instance;
}

SubstPtr cons(TermPtr head, SubstPtr tail) {
  return mk_subst(Cons{std::move(head), std::move(tail)});
}

SubstPtr comp(SubstPtr first, SubstPtr second) {
  return mk_subst(Comp{std::move(first), std::move(second)});
}

SubstPtr shift_n(int n) {
  if (n < 0) throw DomainError("negative shift");
  if (n == 0) return subst_id();
  SubstPtr u = subst_shift();
  for (int i = 1; i < n; ++i) u = comp(subst_shift(), u);
  return u;
}

SubstPtr cons_list(const std::vector<TermPtr>& heads, SubstPtr tail) {
  SubstPtr u = std::move(tail);
  for (auto it = heads.rbegin(); it != heads.rend(); ++it) u = cons(*it, u);
  return u;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& x) { return x.index == std::get<Var>(b->node).index; },
          [&](const App& x) {
            const auto& y = std::get<App>(b->node);
            return equal(x.fn, y.fn) && equal(x.arg, y.arg);
          },
          [&](const Lam& x) { return equal(x.body, std::get<Lam>(b->node).body); },
          [&](const FunApp& x) {
            const auto& y = std::get<FunApp>(b->node);
            if (x.sym != y.sym || x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i)
              if (!equal(x.args[i], y.args[i])) return false;
            return true;
          },
          [&](const Closure& x) {
            const auto& y = std::get<Closure>(b->node);
            return equal(x.body, y.body) && equal(x.subst, y.subst);
          },
      },
      a->node);
}

bool equal(const SubstPtr& a, const SubstPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Id&) { return true; },
          [&](const Shift&) { return true; },
          [&](const Cons& x) {
            const auto& y = std::get<Cons>(b->node);
            return equal(x.head, y.head) && equal(x.tail, y.tail);
          },
          [&](const Comp& x) {
            const auto& y = std::get<Comp>(b->node);
            return equal(x.first, y.first) && equal(x.second, y.second);
          },
      },
      a->node);
}

bool sigma_normal(const TermPtr& t) {
  return std::visit(
      overloaded{
          [](const Var&) { return true; },
          [](const App& n) { return sigma_normal(n.fn) && sigma_normal(n.arg); },
          [](const Lam& n) { return sigma_normal(n.body); },
          [](const FunApp& n) {
            for (const auto& a : n.args)
              if (!sigma_normal(a)) return false;
            return true;
          },
          [](const Closure&) { return false; },
      },
      t->node);
}

bool sigma_normal(const SubstPtr& u) {
  // Cons-list of σ-normal terms over a right-nested Shift chain.
  const Subst* p = u.get();
  while (const auto* c = std::get_if<Cons>(&p->node)) {
    if (!sigma_normal(c->head)) return false;
    p = c->tail.get();
  }
  bool composite = false;
  while (const auto* c = std::get_if<Comp>(&p->node)) {
    if (!std::holds_alternative<Shift>(c->first->node)) return false;
    composite = true;
    p = c->second.get();
  }
  if (composite) return std::holds_alternative<Shift>(p->node);
  return std::holds_alternative<Id>(p->node) || std::holds_alternative<Shift>(p->node);
}

} // namespace genoid
