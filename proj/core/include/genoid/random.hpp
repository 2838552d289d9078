#pragma once

#include <cstdint>
#include <random>

#include "genoid/clone.hpp"
#include "genoid/formula.hpp"
#include "genoid/term.hpp"

namespace genoid {

/// Seed printed by selftest headers; every property suite derives its
/// stream from this unless told otherwise.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Uniform constructor choice with a depth bound; indices are drawn from
// 1..max_index. Leaves are variables.
struct TermGenConfig {
  int max_depth = 8;
  int max_index = 6;
  bool allow_lam = true;
  bool allow_closure = true;        // explicit closures t[u]
  const Signature* sig = nullptr;   // when set, FunApp nodes over its functions
};

TermPtr random_term(std::mt19937_64& rng, const TermGenConfig& cfg);
SubstPtr random_subst(std::mt19937_64& rng, const TermGenConfig& cfg);

/// Pure lambda term (Var/App/Lam) with at most `max_size` nodes.
TermPtr random_pure_term(std::mt19937_64& rng, int max_size, int max_index);

struct FirstOrderGenConfig {
  int max_depth = 3;
  int max_index = 4;
  const Signature* sig = nullptr; // functions used; may be null for variables only
};

TermPtr random_first_order_term(std::mt19937_64& rng, const FirstOrderGenConfig& cfg);

/// Cons/Comp chains whose heads are first-order terms.
SubstPtr random_first_order_subst(std::mt19937_64& rng, const FirstOrderGenConfig& cfg, int depth);

struct FormulaGenConfig {
  int max_depth = 5;
  int max_index = 2;
  bool allow_subf = false;
  const Signature* sig = nullptr; // predicates required, functions optional
};

FormulaPtr random_formula(std::mt19937_64& rng, const FormulaGenConfig& cfg);

/// Uniformly random tables over the signature.
Structure random_structure(std::mt19937_64& rng, const Signature& sig, int carrier);

Assignment random_assignment(std::mt19937_64& rng, int carrier, int length);

} // namespace genoid
