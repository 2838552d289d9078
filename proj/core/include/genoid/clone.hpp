#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "genoid/sigma.hpp"
#include "genoid/term.hpp"

namespace genoid {

/// An infinite sequence [t1, ..., tk, x1·tail, x2·tail, ...] of terms,
/// represented by its finite prefix and a substitution tail. Viewed as a
/// substitution it is exactly [t1, ..., tk, tail].
struct FinitarySequence {
  std::vector<TermPtr> prefix;
  SubstPtr tail;

  static FinitarySequence unit() { return {{}, subst_id()}; }
  SubstPtr as_subst() const { return cons_list(prefix, tail); }
  /// Coordinate i (1-based) of the represented sequence, σ-normalized.
  TermPtr coordinate(int i) const;
};

struct Signature {
  std::map<std::string, int> functions;  // symbol -> arity (>= 0)
  std::map<std::string, int> predicates; // symbol -> arity (>= 0)
};

/// Checks the cross-map uniqueness invariant; throws DomainError.
void validate_signature(const Signature& sig);

struct FunTable {
  int arity = 0;
  std::vector<int> values; // row-major over tuples, first argument most significant
};

struct PredTable {
  int arity = 0;
  std::vector<bool> truth; // row-major over tuples
};

/// A finite first-order structure: carrier {0, ..., carrier-1} plus total
/// function tables and predicate tables.
struct Structure {
  int carrier = 1;
  std::map<std::string, FunTable> functions;
  std::map<std::string, PredTable> predicates;

  Signature signature() const;
};

/// A point of the countable power of the carrier with a finite description:
/// coordinate i reads values[i-1] when in range and pad otherwise.
struct Assignment {
  std::vector<int> values;
  int pad = 0;

  int at(int i) const {
    return i <= static_cast<int>(values.size()) ? values[i - 1] : pad;
  }
};

/// Advances to the next assignment in (values, pad) lexicographic order
/// over the carrier; false once the all-max assignment wraps around.
bool next_assignment(Assignment& env, int carrier);

/// Row-major rank of a tuple over carrier n (first component most significant).
std::size_t tuple_rank(const std::vector<int>& tuple, int carrier);
std::vector<int> tuple_unrank(std::size_t rank, int arity, int carrier);

/// a[t1, t2, ...]: the clone action, i.e. norm(a[prefix..., tail]).
/// When the tail is the identity the prefix must cover finite_rank(a); the
/// e-closure convention a[a1, ..., an, e] is only meaningful for n >= rank.
TermPtr clone_apply(const TermPtr& a, const FinitarySequence& s);

/// Componentwise composition [a1, a2, ...][b1, b2, ...]; unit() is neutral.
FinitarySequence seq_compose(const FinitarySequence& s, const FinitarySequence& t);

/// Evaluates a σ-normal, Lam-free term: Var(i) reads coordinate i of env,
/// FunApp applies the structure's table to the evaluated arguments.
int eval_term(const TermPtr& t, const Structure& m, const Assignment& env);

struct AxiomReport {
  int samples = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Randomized verification of the left-algebra axioms (projection and
/// composition) on `samples` random terms, sequences and assignments.
AxiomReport check_left_algebra_axioms(const Structure& m, int samples, std::uint64_t seed);

// Structure text format: a carrier-size line, then one line per symbol:
//   fun <name>/<arity>: <tuple>=<value> ...
//   pred <name>/<arity>: <tuple> ...
// Tuples are comma-separated carrier elements, () when empty. Function
// tables must be total; predicate lines list the true tuples.
Structure parse_structure(std::string_view text);
std::string print_structure(const Structure& m);

/// Number of structures over `sig` with the given carrier size; saturates.
std::uint64_t structure_count(const Signature& sig, int carrier);

/// Enumerates every structure over `sig` with the given carrier size in
/// odometer order (functions before predicates, symbols by name, last tuple
/// fastest). Stops early when the visitor returns false.
void for_each_structure(const Signature& sig, int carrier,
                        const std::function<bool(const Structure&)>& visit);

} // namespace genoid
