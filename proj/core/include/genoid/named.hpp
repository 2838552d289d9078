#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "genoid/sigma.hpp"
#include "genoid/term.hpp"

namespace genoid {

// A conventional named-variable lambda calculus, independent of the
// substitution engine, used as a differential-testing oracle. Free
// variables are restricted to the literal family x1, x2, ... so both
// representations share a variable universe.

struct NamedTerm;
using NamedPtr = std::shared_ptr<const NamedTerm>;

struct NVar {
  std::string name;
};
struct NLam {
  std::string binder;
  NamedPtr body;
};
struct NApp {
  NamedPtr fn;
  NamedPtr arg;
};

struct NamedTerm {
  std::variant<NVar, NLam, NApp> node;
};

NamedPtr nvar(std::string name);
NamedPtr nlam(std::string binder, NamedPtr body);
NamedPtr napp(NamedPtr fn, NamedPtr arg);

/// Standard de Bruijn conversion; free `xi` names map to index i, any other
/// free identifier is rejected.
TermPtr to_debruijn(const NamedPtr& t);

/// Inverse bridge for pure lambda terms; binders get generated names.
NamedPtr from_debruijn(const TermPtr& t);

/// Structural equality, binder names included.
bool equal(const NamedPtr& a, const NamedPtr& b);

bool alpha_equal(const NamedPtr& a, const NamedPtr& b);

/// Normal-order β-reduction with textbook capture-avoiding substitution;
/// no explicit substitutions anywhere on this code path.
NormalizeReport<NamedPtr> oracle_normalize(const NamedPtr& t, std::uint64_t fuel = kDefaultFuel);

/// Capture-avoiding substitution of `replacement` for free `name` in `t`.
/// Fresh binders are the base name plus the smallest unused numeric suffix.
NamedPtr named_substitute(const NamedPtr& t, const std::string& name, const NamedPtr& replacement);

} // namespace genoid
