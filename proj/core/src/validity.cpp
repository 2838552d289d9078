#include "genoid/validity.hpp"

namespace genoid {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t assignment_count(int carrier, int rank) {
  std::uint64_t total = static_cast<std::uint64_t>(carrier); // the pad
  for (int i = 0; i < rank; ++i)
    total = saturating_mul(total, static_cast<std::uint64_t>(carrier));
  return total;
}

} // namespace

Verdict check_validity(const FormulaPtr& f, const ValidityOptions& opts) {
  if (opts.max_carrier < 1) throw DomainError("max_carrier must be >= 1");
  const Signature sig = signature_of(f);
  const FormulaPtr normal = normalize_formula(f);
  const int rank = formula_rank(normal);

  std::uint64_t estimate = 0;
  for (int n = 1; n <= opts.max_carrier; ++n)
    estimate = saturating_add(
        estimate, saturating_mul(structure_count(sig, n), assignment_count(n, rank)));
  if (estimate > opts.cap)
    throw CapacityError("validity search would enumerate about " + std::to_string(estimate) +
                            " structure/assignment pairs, above the cap of " +
                            std::to_string(opts.cap),
                        estimate);

  Verdict verdict;
  verdict.bound = opts.max_carrier;
  for (int n = 1; n <= opts.max_carrier && !verdict.counterexample; ++n) {
    for_each_structure(sig, n, [&](const Structure& m) {
      Assignment env;
      env.values.assign(static_cast<std::size_t>(rank), 0);
      env.pad = 0;
      do {
        if (!eval_formula_normal(normal, m, env)) {
          verdict.status = VerdictStatus::Invalid;
          verdict.counterexample = Counterexample{m, env};
          return false;
        }
      } while (next_assignment(env, n));
      return true;
    });
  }
  return verdict;
}

Verdict check_equivalence(const FormulaPtr& f, const FormulaPtr& g,
                          const ValidityOptions& opts) {
  return check_validity(conj(implies(f, g), implies(g, f)), opts);
}

} // namespace genoid
