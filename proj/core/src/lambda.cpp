#include "genoid/lambda.hpp"

#include <string>

namespace genoid {

namespace {

bool occurs_free(const TermPtr& t, int target, int binders) {
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index == target + binders; },
          [&](const App& n) {
            return occurs_free(n.fn, target, binders) || occurs_free(n.arg, target, binders);
          },
          [&](const Lam& n) { return occurs_free(n.body, target, binders + 1); },
          [&](const FunApp& n) {
            for (const auto& a : n.args)
              if (occurs_free(a, target, binders)) return true;
            return false;
          },
          [&](const Closure&) -> bool {
            throw DomainError("occurs_free expects a sigma-normal term");
          },
      },
      t->node);
}

/// Removes the (unused) first coordinate: t[x1 . id].
TermPtr unshift(const TermPtr& t) {
  return norm_term(closure(t, cons(var(1), subst_id())));
}

// One leftmost-outermost β/η step on a σ-normal term, or nullptr.
TermPtr step(const TermPtr& t, const LambdaFlags& flags) {
  return std::visit(
      overloaded{
          [&](const Var&) -> TermPtr { return nullptr; },
          [&](const App& n) -> TermPtr {
            if (flags.beta) {
              if (const auto* l = std::get_if<Lam>(&n.fn->node))
                return closure(l->body, cons(n.arg, subst_id()));
            }
            if (TermPtr fn = step(n.fn, flags)) return app(std::move(fn), n.arg);
            if (TermPtr arg = step(n.arg, flags)) return app(n.fn, std::move(arg));
            return nullptr;
          },
          [&](const Lam& n) -> TermPtr {
            if (flags.eta) {
              if (const auto* a = std::get_if<App>(&n.body->node)) {
                const auto* v = std::get_if<Var>(&a->arg->node);
                if (v && v->index == 1 && !occurs_free(a->fn, 1, 0)) return unshift(a->fn);
              }
            }
            if (TermPtr body = step(n.body, flags)) return lam(std::move(body));
            return nullptr;
          },
          [&](const FunApp& n) -> TermPtr {
            for (std::size_t i = 0; i < n.args.size(); ++i) {
              if (TermPtr arg = step(n.args[i], flags)) {
                std::vector<TermPtr> args = n.args;
                args[i] = std::move(arg);
                return fun_app(n.sym, std::move(args));
              }
            }
            return nullptr;
          },
          [&](const Closure&) -> TermPtr {
            throw DomainError("step expects a sigma-normal term");
          },
      },
      t->node);
}

} // namespace

NormalizeReport<TermPtr> beta_eta_normalize(const TermPtr& t, const LambdaFlags& flags) {
  auto sigma = sigma_normalize(t);
  if (!sigma.normal()) return {sigma.result, 0, NormStatus::FuelExhausted};
  TermPtr current = sigma.result;
  std::uint64_t steps = 0;
  while (true) {
    TermPtr reduced = step(current, flags);
    if (!reduced) return {current, steps, NormStatus::Normal};
    if (steps == flags.fuel) return {current, steps, NormStatus::FuelExhausted};
    ++steps;
    sigma = sigma_normalize(reduced);
    if (!sigma.normal()) return {current, steps, NormStatus::FuelExhausted};
    current = sigma.result;
  }
}

TermPtr beta_eta_nf(const TermPtr& t, const LambdaFlags& flags) {
  auto report = beta_eta_normalize(t, flags);
  if (!report.normal()) throw FuelError("beta/eta normalization ran out of fuel");
  return report.result;
}

TermPtr combinator(std::string_view name) {
  if (name == "I") return lam(var(1));
  if (name == "K") return lam(lam(var(2)));
  if (name == "S")
    return lam(lam(lam(app(app(var(3), var(1)), app(var(2), var(1))))));
  throw DomainError("unknown combinator '" + std::string(name) + "' (expected I, K or S)");
}

TermPtr classic_lambda(int i, const TermPtr& t) {
  if (i < 1) throw DomainError("classic_lambda index must be >= 1");
  std::vector<TermPtr> heads;
  heads.reserve(static_cast<std::size_t>(i));
  for (int j = 2; j <= i; ++j) heads.push_back(var(j));
  heads.push_back(var(1));
  return lam(closure(t, cons_list(heads, shift_n(i + 1))));
}

ClosureResult closure_of(const TermPtr& t) {
  TermPtr body = norm_term(t);
  const int rank = finite_rank(body);
  TermPtr closed = body;
  for (int i = 0; i < rank; ++i) closed = lam(std::move(closed));
  return {std::move(closed), rank};
}

} // namespace genoid
