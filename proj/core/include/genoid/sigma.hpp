#pragma once

#include <cstdint>

#include "genoid/term.hpp"

namespace genoid {

inline constexpr std::uint64_t kDefaultFuel = 100'000;

enum class NormStatus { Normal, FuelExhausted };

template <class T>
struct NormalizeReport {
  T result;
  std::uint64_t steps = 0;
  NormStatus status = NormStatus::Normal;

  bool normal() const { return status == NormStatus::Normal; }
};

/// Flattened normal form of a substitution: [prefix..., Shift^shift].
/// Every prefix entry is σ-normal. The identity is {[], 0}.
struct SubstNF {
  std::vector<TermPtr> prefix;
  int shift = 0;

  bool is_identity() const { return prefix.empty() && shift == 0; }
};

SubstPtr to_subst(const SubstNF& nf);

// Pushes every explicit closure through the term until none remain. The
// σ-system on its own terminates, so FuelExhausted here signals either an
// absurdly large input or an engine defect; the input is returned unchanged.
NormalizeReport<TermPtr> sigma_normalize(const TermPtr& t, std::uint64_t fuel = kDefaultFuel);

// Normal form of a substitution: a Cons-list of σ-normal terms over Shift^n,
// with the pairing collapse [.., x_n, Shift^n] = [.., Shift^(n-1)] applied as
// a post-pass once the main rules reach a fixpoint.
NormalizeReport<SubstPtr> subst_normalize(const SubstPtr& u, std::uint64_t fuel = kDefaultFuel);

// Throwing conveniences for contexts where exhaustion is a defect.
TermPtr norm_term(const TermPtr& t, std::uint64_t fuel = kDefaultFuel);
SubstPtr norm_subst(const SubstPtr& u, std::uint64_t fuel = kDefaultFuel);
SubstNF norm_subst_nf(const SubstPtr& u, std::uint64_t fuel = kDefaultFuel);

/// Largest free de Bruijn index of the σ-normal form; 0 for closed terms.
/// This is the least n such that the term's action depends only on the
/// first n coordinates of a substitution.
int finite_rank(const TermPtr& t);

/// δu = [x, u+], the monad endomorphism on substitutions.
SubstPtr delta(const SubstPtr& u);

/// Kleisli product u * v = u [x1, v].
SubstPtr kleisli_star(const SubstPtr& u, const SubstPtr& v);

} // namespace genoid
