#include "genoid/sigma.hpp"

#include <algorithm>

namespace genoid {

namespace {

// Internal signal for running out of budget; callers of the public API get
// a report, never this exception.
struct OutOfFuel {};

struct Fuel {
  std::uint64_t remaining;
  std::uint64_t used = 0;

  void spend(std::uint64_t n = 1) {
    used += n;
    if (n > remaining) throw OutOfFuel{};
    remaining -= n;
  }
};

TermPtr push(const TermPtr& t, const SubstNF& nf, Fuel& fuel);
SubstNF flatten(const SubstPtr& u, Fuel& fuel);

// Comp of two flattened substitutions, in diagrammatic order.
SubstNF compose(const SubstNF& a, const SubstNF& b, Fuel& fuel) {
  SubstNF out;
  out.prefix.reserve(a.prefix.size());
  for (const auto& t : a.prefix) {
    fuel.spend(); // [a, u] v -> [a v, u v]
    out.prefix.push_back(push(t, b, fuel));
  }
  // Shift^k ; b drops the first k coordinates of b.
  int k = a.shift;
  if (k <= static_cast<int>(b.prefix.size())) {
    fuel.spend(static_cast<std::uint64_t>(k) + 1);
    out.prefix.insert(out.prefix.end(), b.prefix.begin() + k, b.prefix.end());
    out.shift = b.shift;
  } else {
    fuel.spend(b.prefix.size() + 1);
    out.shift = b.shift + (k - static_cast<int>(b.prefix.size()));
  }
  return out;
}

// Lift a substitution under a binder: [x1, u ; Shift].
SubstNF lift(const SubstNF& nf, Fuel& fuel) {
  SubstNF out;
  out.prefix.reserve(nf.prefix.size() + 1);
  out.prefix.push_back(var(1));
  SubstNF one_shift{{}, 1};
  for (const auto& t : nf.prefix) out.prefix.push_back(push(t, one_shift, fuel));
  out.shift = nf.shift + 1;
  return out;
}

// σ-normalizes t (which must itself be Closure-free below this call's
// handling — arbitrary terms are handled by norm_rec) under nf.
TermPtr push(const TermPtr& t, const SubstNF& nf, Fuel& fuel) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> TermPtr {
            const int k = static_cast<int>(nf.prefix.size());
            if (v.index <= k) {
              fuel.spend(static_cast<std::uint64_t>(v.index));
              return nf.prefix[v.index - 1];
            }
            fuel.spend(static_cast<std::uint64_t>(k) + 1);
            const int target = v.index - k + nf.shift;
            return target == v.index ? t : var(target);
          },
          [&](const App& n) -> TermPtr {
            fuel.spend();
            return app(push(n.fn, nf, fuel), push(n.arg, nf, fuel));
          },
          [&](const Lam& n) -> TermPtr {
            fuel.spend();
            return lam(push(n.body, lift(nf, fuel), fuel));
          },
          [&](const FunApp& n) -> TermPtr {
            fuel.spend();
            std::vector<TermPtr> args;
            args.reserve(n.args.size());
            for (const auto& a : n.args) args.push_back(push(a, nf, fuel));
            return fun_app(n.sym, std::move(args));
          },
          [&](const Closure& n) -> TermPtr {
            fuel.spend(); // (t u) v -> t (u ; v)
            return push(n.body, compose(flatten(n.subst, fuel), nf, fuel), fuel);
          },
      },
      t->node);
}

TermPtr norm_rec(const TermPtr& t, Fuel& fuel) {
  return std::visit(
      overloaded{
          [&](const Var&) -> TermPtr { return t; },
          [&](const App& n) -> TermPtr {
            TermPtr fn = norm_rec(n.fn, fuel);
            TermPtr arg = norm_rec(n.arg, fuel);
            return fn == n.fn && arg == n.arg ? t : app(std::move(fn), std::move(arg));
          },
          [&](const Lam& n) -> TermPtr {
            TermPtr body = norm_rec(n.body, fuel);
            return body == n.body ? t : lam(std::move(body));
          },
          [&](const FunApp& n) -> TermPtr {
            std::vector<TermPtr> args;
            args.reserve(n.args.size());
            bool changed = false;
            for (const auto& a : n.args) {
              args.push_back(norm_rec(a, fuel));
              changed = changed || args.back() != a;
            }
            return changed ? fun_app(n.sym, std::move(args)) : t;
          },
          [&](const Closure& n) -> TermPtr {
            SubstNF nf = flatten(n.subst, fuel);
            if (nf.is_identity()) {
              fuel.spend(); // t id -> t
              return norm_rec(n.body, fuel);
            }
            return push(n.body, nf, fuel);
          },
      },
      t->node);
}

SubstNF flatten(const SubstPtr& u, Fuel& fuel) {
  return std::visit(
      overloaded{
          [&](const Id&) -> SubstNF { return {}; },
          [&](const Shift&) -> SubstNF { return {{}, 1}; },
          [&](const Cons& n) -> SubstNF {
            TermPtr head = norm_rec(n.head, fuel);
            SubstNF tail = flatten(n.tail, fuel);
            tail.prefix.insert(tail.prefix.begin(), std::move(head));
            return tail;
          },
          [&](const Comp& n) -> SubstNF {
            SubstNF first = flatten(n.first, fuel);
            SubstNF second = flatten(n.second, fuel);
            return compose(first, second, fuel);
          },
      },
      u->node);
}

// Pairing collapse (G3): [..., x_n, Shift^n] = [..., Shift^(n-1)], applied
// only after the main rules are done; interleaving it with distribution can
// oscillate, so the engine treats it as a simplification post-pass.
void collapse(SubstNF& nf) {
  while (!nf.prefix.empty() && nf.shift >= 1) {
    const auto* v = std::get_if<Var>(&nf.prefix.back()->node);
    if (!v || v->index != nf.shift) break;
    nf.prefix.pop_back();
    nf.shift -= 1;
  }
}

} // namespace

SubstPtr to_subst(const SubstNF& nf) {
  return cons_list(nf.prefix, shift_n(nf.shift));
}

NormalizeReport<TermPtr> sigma_normalize(const TermPtr& t, std::uint64_t fuel_budget) {
  Fuel fuel{fuel_budget};
  try {
    TermPtr result = norm_rec(t, fuel);
    return {std::move(result), fuel.used, NormStatus::Normal};
  } catch (const OutOfFuel&) {
    return {t, fuel.used, NormStatus::FuelExhausted};
  }
}

NormalizeReport<SubstPtr> subst_normalize(const SubstPtr& u, std::uint64_t fuel_budget) {
  Fuel fuel{fuel_budget};
  try {
    SubstNF nf = flatten(u, fuel);
    collapse(nf);
    return {to_subst(nf), fuel.used, NormStatus::Normal};
  } catch (const OutOfFuel&) {
    return {u, fuel.used, NormStatus::FuelExhausted};
  }
}

TermPtr norm_term(const TermPtr& t, std::uint64_t fuel) {
  auto report = sigma_normalize(t, fuel);
  if (!report.normal()) throw FuelError("sigma normalization ran out of fuel");
  return report.result;
}

SubstPtr norm_subst(const SubstPtr& u, std::uint64_t fuel) {
  auto report = subst_normalize(u, fuel);
  if (!report.normal()) throw FuelError("substitution normalization ran out of fuel");
  return report.result;
}

SubstNF norm_subst_nf(const SubstPtr& u, std::uint64_t fuel_budget) {
  Fuel fuel{fuel_budget};
  try {
    SubstNF nf = flatten(u, fuel);
    collapse(nf);
    return nf;
  } catch (const OutOfFuel&) {
    throw FuelError("substitution normalization ran out of fuel");
  }
}

namespace {

int free_depth(const TermPtr& t, int binders) {
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index > binders ? v.index - binders : 0; },
          [&](const App& n) {
            return std::max(free_depth(n.fn, binders), free_depth(n.arg, binders));
          },
          [&](const Lam& n) { return free_depth(n.body, binders + 1); },
          [&](const FunApp& n) {
            int r = 0;
            for (const auto& a : n.args) r = std::max(r, free_depth(a, binders));
            return r;
          },
          [&](const Closure&) -> int {
            throw DomainError("free_depth expects a sigma-normal term");
          },
      },
      t->node);
}

} // namespace

int finite_rank(const TermPtr& t) { return free_depth(norm_term(t), 0); }

SubstPtr delta(const SubstPtr& u) {
  return cons(var(1), comp(u, subst_shift()));
}

SubstPtr kleisli_star(const SubstPtr& u, const SubstPtr& v) {
  return comp(u, cons(var(1), v));
}

} // namespace genoid
