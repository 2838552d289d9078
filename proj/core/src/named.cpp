#include "genoid/named.hpp"

#include <map>
#include <set>

namespace genoid {

namespace {

template <class Node>
NamedPtr mk(Node node) {
  return std::make_shared<const NamedTerm>(NamedTerm{std::move(node)});
}

void free_vars(const NamedPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  std::visit(
      overloaded{
          [&](const NVar& v) {
            if (!bound.contains(v.name)) out.insert(v.name);
          },
          [&](const NLam& n) {
            const bool fresh = bound.insert(n.binder).second;
            free_vars(n.body, bound, out);
            if (fresh) bound.erase(n.binder);
          },
          [&](const NApp& n) {
            free_vars(n.fn, bound, out);
            free_vars(n.arg, bound, out);
          },
      },
      t->node);
}

std::set<std::string> free_vars(const NamedPtr& t) {
  std::set<std::string> bound, out;
  free_vars(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int suffix = 1;; ++suffix) {
    std::string candidate = base + std::to_string(suffix);
    if (!avoid.contains(candidate)) return candidate;
  }
}

} // namespace

NamedPtr nvar(std::string name) {
  if (name.empty()) throw DomainError("named variable must be nonempty");
  return mk(NVar{std::move(name)});
}

NamedPtr nlam(std::string binder, NamedPtr body) {
  if (binder.empty()) throw DomainError("binder name must be nonempty");
  return mk(NLam{std::move(binder), std::move(body)});
}

NamedPtr napp(NamedPtr fn, NamedPtr arg) { return mk(NApp{std::move(fn), std::move(arg)}); }

NamedPtr named_substitute(const NamedPtr& t, const std::string& name,
                          const NamedPtr& replacement) {
  return std::visit(
      overloaded{
          [&](const NVar& v) { return v.name == name ? replacement : t; },
          [&](const NLam& n) -> NamedPtr {
            if (n.binder == name) return t; // shadowed
            const std::set<std::string> fv_repl = free_vars(replacement);
            if (fv_repl.contains(n.binder)) {
              // The binder would capture; rename it first.
              std::set<std::string> avoid = fv_repl;
              for (const auto& v : free_vars(n.body)) avoid.insert(v);
              avoid.insert(name);
              const std::string renamed = fresh_name(n.binder, avoid);
              NamedPtr body = named_substitute(n.body, n.binder, nvar(renamed));
              return nlam(renamed, named_substitute(body, name, replacement));
            }
            return nlam(n.binder, named_substitute(n.body, name, replacement));
          },
          [&](const NApp& n) -> NamedPtr {
            return napp(named_substitute(n.fn, name, replacement),
                        named_substitute(n.arg, name, replacement));
          },
      },
      t->node);
}

namespace {

NamedPtr oracle_step(const NamedPtr& t) {
  return std::visit(
      overloaded{
          [&](const NVar&) -> NamedPtr { return nullptr; },
          [&](const NLam& n) -> NamedPtr {
            if (NamedPtr body = oracle_step(n.body)) return nlam(n.binder, std::move(body));
            return nullptr;
          },
          [&](const NApp& n) -> NamedPtr {
            if (const auto* l = std::get_if<NLam>(&n.fn->node))
              return named_substitute(l->body, l->binder, n.arg);
            if (NamedPtr fn = oracle_step(n.fn)) return napp(std::move(fn), n.arg);
            if (NamedPtr arg = oracle_step(n.arg)) return napp(n.fn, std::move(arg));
            return nullptr;
          },
      },
      t->node);
}

} // namespace

NormalizeReport<NamedPtr> oracle_normalize(const NamedPtr& t, std::uint64_t fuel) {
  NamedPtr current = t;
  std::uint64_t steps = 0;
  while (true) {
    NamedPtr reduced = oracle_step(current);
    if (!reduced) return {current, steps, NormStatus::Normal};
    if (steps == fuel) return {current, steps, NormStatus::FuelExhausted};
    ++steps;
    current = std::move(reduced);
  }
}

namespace {

int xi_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return 0;
  long value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    const char c = name[i];
    if (c < '0' || c > '9') return 0;
    value = value * 10 + (c - '0');
    if (value > 1'000'000) return 0;
  }
  return static_cast<int>(value);
}

TermPtr to_db(const NamedPtr& t, std::vector<std::string>& binders) {
  return std::visit(
      overloaded{
          [&](const NVar& v) -> TermPtr {
            for (std::size_t i = binders.size(); i-- > 0;) {
              if (binders[i] == v.name)
                return var(static_cast<int>(binders.size() - i));
            }
            if (const int i = xi_index(v.name))
              return var(static_cast<int>(binders.size()) + i);
            throw DomainError("unbound identifier '" + v.name + "' (free variables must be x1, x2, ...)");
          },
          [&](const NLam& n) -> TermPtr {
            binders.push_back(n.binder);
            TermPtr body = to_db(n.body, binders);
            binders.pop_back();
            return lam(std::move(body));
          },
          [&](const NApp& n) -> TermPtr {
            return app(to_db(n.fn, binders), to_db(n.arg, binders));
          },
      },
      t->node);
}

TermPtr alpha_key(const NamedPtr& t, std::vector<std::string>& binders) {
  // Like to_db but tolerant of arbitrary free names, for alpha comparison.
  return std::visit(
      overloaded{
          [&](const NVar& v) -> TermPtr {
            for (std::size_t i = binders.size(); i-- > 0;) {
              if (binders[i] == v.name)
                return var(static_cast<int>(binders.size() - i));
            }
            return fun_app("free_" + v.name, {});
          },
          [&](const NLam& n) -> TermPtr {
            binders.push_back(n.binder);
            TermPtr body = alpha_key(n.body, binders);
            binders.pop_back();
            return lam(std::move(body));
          },
          [&](const NApp& n) -> TermPtr {
            return app(alpha_key(n.fn, binders), alpha_key(n.arg, binders));
          },
      },
      t->node);
}

NamedPtr from_db(const TermPtr& t, int depth) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> NamedPtr {
            if (v.index <= depth) return nvar("y" + std::to_string(depth - v.index + 1));
            return nvar("x" + std::to_string(v.index - depth));
          },
          [&](const Lam& n) -> NamedPtr {
            return nlam("y" + std::to_string(depth + 1), from_db(n.body, depth + 1));
          },
          [&](const App& n) -> NamedPtr {
            return napp(from_db(n.fn, depth), from_db(n.arg, depth));
          },
          [&](const FunApp&) -> NamedPtr {
            throw DomainError("from_debruijn handles pure lambda terms only");
          },
          [&](const Closure&) -> NamedPtr {
            throw DomainError("from_debruijn expects a sigma-normal term");
          },
      },
      t->node);
}

} // namespace

TermPtr to_debruijn(const NamedPtr& t) {
  std::vector<std::string> binders;
  return to_db(t, binders);
}

NamedPtr from_debruijn(const TermPtr& t) { return from_db(t, 0); }

bool equal(const NamedPtr& a, const NamedPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const NVar& x) { return x.name == std::get<NVar>(b->node).name; },
          [&](const NLam& x) {
            const auto& y = std::get<NLam>(b->node);
            return x.binder == y.binder && equal(x.body, y.body);
          },
          [&](const NApp& x) {
            const auto& y = std::get<NApp>(b->node);
            return equal(x.fn, y.fn) && equal(x.arg, y.arg);
          },
      },
      a->node);
}

bool alpha_equal(const NamedPtr& a, const NamedPtr& b) {
  std::vector<std::string> binders;
  TermPtr ka = alpha_key(a, binders);
  binders.clear();
  TermPtr kb = alpha_key(b, binders);
  return equal(ka, kb);
}

} // namespace genoid
