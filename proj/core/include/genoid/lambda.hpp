#pragma once

#include <string_view>

#include "genoid/sigma.hpp"
#include "genoid/term.hpp"

namespace genoid {

/// Which reduction laws are oriented as rewrites, plus the β/η step budget.
struct LambdaFlags {
  bool beta = true;
  bool eta = true;
  std::uint64_t fuel = kDefaultFuel;
};

// Normal-order (leftmost-outermost) β/η reduction interleaved with
// σ-normalization. β fires as App(Lam(a), b) -> a[b . id]; η contracts
// \. f x1 to the unshifted f when the bound coordinate does not occur.
// FuelExhausted is the expected answer for divergent terms, with the last
// σ-normal snapshot as the result. `steps` counts β/η firings only.
NormalizeReport<TermPtr> beta_eta_normalize(const TermPtr& t, const LambdaFlags& flags = {});

/// Throwing convenience; exhaustion becomes FuelError.
TermPtr beta_eta_nf(const TermPtr& t, const LambdaFlags& flags = {});

/// The closed terms I, K, S.
TermPtr combinator(std::string_view name);

/// The classical binder λx_i, recovered from the nameless binder by a
/// coordinate-permuting substitution: λ(t[x2, ..., xi, x1, Shift^(i+1)]).
TermPtr classic_lambda(int i, const TermPtr& t);

/// λ^n (norm t) for n = finite_rank(t); applying it back to x_n ... x_1
/// re-normalizes to norm(t).
struct ClosureResult {
  TermPtr closed;
  int rank = 0;
};
ClosureResult closure_of(const TermPtr& t);

} // namespace genoid
