#pragma once

#include <cstdint>
#include <optional>

#include "genoid/clone.hpp"
#include "genoid/formula.hpp"

namespace genoid {

enum class VerdictStatus { ValidUpToBound, Invalid };

struct Counterexample {
  Structure structure;
  Assignment assignment;
};

/// Outcome of a bounded validity search. Verdicts never claim unbounded
/// validity; an Invalid verdict carries a counterexample that re-evaluates
/// to false on replay.
struct Verdict {
  VerdictStatus status = VerdictStatus::ValidUpToBound;
  std::optional<Counterexample> counterexample;
  int bound = 0;

  bool invalid() const { return status == VerdictStatus::Invalid; }
};

struct ValidityOptions {
  int max_carrier = 3;
  /// Cap on structure × assignment enumerations; exceeding it raises
  /// CapacityError with the computed estimate.
  std::uint64_t cap = 10'000'000;
};

/// Enumerates every structure over the formula's signature with carrier
/// size 1..max_carrier and every assignment over the first formula_rank(f)
/// coordinates (pad iterated over the carrier); reports the first — i.e.
/// lexicographically least — falsifying pair, else valid-up-to-bound.
Verdict check_validity(const FormulaPtr& f, const ValidityOptions& opts = {});

/// check_validity of (f -> g) & (g -> f).
Verdict check_equivalence(const FormulaPtr& f, const FormulaPtr& g,
                          const ValidityOptions& opts = {});

} // namespace genoid
