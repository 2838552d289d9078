#include "genoid/clone.hpp"

#include <random>
#include <sstream>

#include "genoid/printer.hpp"
#include "genoid/random.hpp"

namespace genoid {

TermPtr FinitarySequence::coordinate(int i) const {
  if (i < 1) throw DomainError("sequence coordinate must be >= 1");
  if (i <= static_cast<int>(prefix.size())) return norm_term(prefix[i - 1]);
  return norm_term(closure(var(i), as_subst()));
}

void validate_signature(const Signature& sig) {
  for (const auto& [name, arity] : sig.functions) {
    if (arity < 0) throw DomainError("negative arity for function " + name);
    if (sig.predicates.contains(name))
      throw DomainError("symbol '" + name + "' declared as both function and predicate");
  }
  for (const auto& [name, arity] : sig.predicates)
    if (arity < 0) throw DomainError("negative arity for predicate " + name);
}

Signature Structure::signature() const {
  Signature sig;
  for (const auto& [name, table] : functions) sig.functions[name] = table.arity;
  for (const auto& [name, table] : predicates) sig.predicates[name] = table.arity;
  return sig;
}

bool next_assignment(Assignment& env, int carrier) {
  if (env.pad + 1 < carrier) {
    ++env.pad;
    return true;
  }
  env.pad = 0;
  for (std::size_t i = env.values.size(); i-- > 0;) {
    if (env.values[i] + 1 < carrier) {
      ++env.values[i];
      return true;
    }
    env.values[i] = 0;
  }
  return false;
}

std::size_t tuple_rank(const std::vector<int>& tuple, int carrier) {
  std::size_t rank = 0;
  for (int v : tuple) rank = rank * static_cast<std::size_t>(carrier) + static_cast<std::size_t>(v);
  return rank;
}

std::vector<int> tuple_unrank(std::size_t rank, int arity, int carrier) {
  std::vector<int> tuple(static_cast<std::size_t>(arity));
  for (int i = arity; i-- > 0;) {
    tuple[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::size_t>(carrier));
    rank /= static_cast<std::size_t>(carrier);
  }
  return tuple;
}

namespace {

std::size_t table_size(int carrier, int arity) {
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(carrier);
  return size;
}

} // namespace

TermPtr clone_apply(const TermPtr& a, const FinitarySequence& s) {
  const int rank = finite_rank(a);
  if (rank > static_cast<int>(s.prefix.size())) {
    const SubstPtr tail = norm_subst(s.tail);
    if (std::holds_alternative<Id>(tail->node))
      throw DomainError("sequence closed with the identity supplies only " +
                        std::to_string(s.prefix.size()) + " coordinates, term has rank " +
                        std::to_string(rank));
  }
  return norm_term(closure(a, s.as_subst()));
}

FinitarySequence seq_compose(const FinitarySequence& s, const FinitarySequence& t) {
  SubstNF nf = norm_subst_nf(comp(s.as_subst(), t.as_subst()));
  return {std::move(nf.prefix), shift_n(nf.shift)};
}

int eval_term(const TermPtr& t, const Structure& m, const Assignment& env) {
  return std::visit(
      overloaded{
          [&](const Var& v) {
            const int value = env.at(v.index);
            if (value < 0 || value >= m.carrier)
              throw DomainError("assignment value " + std::to_string(value) +
                                " outside carrier of size " + std::to_string(m.carrier));
            return value;
          },
          [&](const FunApp& n) {
            const auto it = m.functions.find(n.sym);
            if (it == m.functions.end())
              throw DomainError("unknown function symbol '" + n.sym + "'");
            const FunTable& table = it->second;
            if (table.arity != static_cast<int>(n.args.size()))
              throw DomainError("function '" + n.sym + "' expects " +
                                std::to_string(table.arity) + " arguments, got " +
                                std::to_string(n.args.size()));
            std::vector<int> tuple;
            tuple.reserve(n.args.size());
            for (const auto& arg : n.args) tuple.push_back(eval_term(arg, m, env));
            return table.values[tuple_rank(tuple, m.carrier)];
          },
          [&](const App&) -> int {
            throw DomainError("application is not a first-order term");
          },
          [&](const Lam&) -> int {
            throw DomainError("lambda abstraction is not a first-order term");
          },
          [&](const Closure&) -> int {
            throw DomainError("eval_term expects a sigma-normal term");
          },
      },
      t->node);
}

AxiomReport check_left_algebra_axioms(const Structure& m, int samples, std::uint64_t seed) {
  AxiomReport report;
  report.samples = samples;
  std::mt19937_64 rng(seed);
  const Signature sig = m.signature();

  FirstOrderGenConfig gen;
  gen.sig = &sig;
  gen.max_index = 4;
  gen.max_depth = 3;

  std::uniform_int_distribution<int> element(0, m.carrier - 1);
  const auto random_env = [&] {
    Assignment env;
    env.values.resize(6);
    for (auto& v : env.values) v = element(rng);
    env.pad = element(rng);
    return env;
  };

  for (int i = 0; i < samples; ++i) {
    const Assignment env = random_env();

    // Axiom 2: projections read the assignment.
    const int index = static_cast<int>(rng() % 5) + 1;
    if (eval_term(var(index), m, env) != env.at(index)) {
      report.failures.push_back("projection x" + std::to_string(index) + " misread");
      continue;
    }

    // Axiom 1: (a[s])[d] = a[s1[d], s2[d], ...].
    const TermPtr a = random_first_order_term(rng, gen);
    FinitarySequence s;
    const int len = static_cast<int>(rng() % 4) + 4;
    for (int j = 0; j < len; ++j) s.prefix.push_back(random_first_order_term(rng, gen));
    s.tail = subst_id();

    const int lhs = eval_term(clone_apply(a, s), m, env);
    Assignment composed;
    composed.values.reserve(static_cast<std::size_t>(len));
    for (int j = 1; j <= len; ++j)
      composed.values.push_back(eval_term(s.coordinate(j), m, env));
    // Coordinates past the prefix come from the identity tail.
    composed.pad = env.pad;
    for (int j = len + 1; j <= len + 2; ++j)
      composed.values.push_back(eval_term(s.coordinate(j), m, env));
    const int rhs = eval_term(norm_term(a), m, composed);
    if (lhs != rhs) {
      std::ostringstream os;
      os << "composition axiom failed for " << print_term(a) << " under "
         << print_subst(s.as_subst());
      report.failures.push_back(os.str());
    }
  }
  return report;
}

namespace {

void print_tuple(std::ostream& os, const std::vector<int>& tuple) {
  if (tuple.empty()) {
    os << "()";
    return;
  }
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ',';
    os << tuple[i];
  }
}

struct StructureScanner {
  std::istringstream in;
  std::string tok;

  bool next() { return static_cast<bool>(in >> tok); }
};

std::vector<int> parse_tuple(const std::string& text, int arity, int carrier) {
  std::vector<int> tuple;
  if (text == "()") {
    if (arity != 0) throw DomainError("empty tuple for arity " + std::to_string(arity));
    return tuple;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    const std::string part = text.substr(i, j - i);
    if (part.empty()) throw DomainError("malformed tuple '" + text + "'");
    tuple.push_back(std::stoi(part));
    i = j + 1;
  }
  if (static_cast<int>(tuple.size()) != arity)
    throw DomainError("tuple '" + text + "' does not match arity " + std::to_string(arity));
  for (int v : tuple)
    if (v < 0 || v >= carrier)
      throw DomainError("tuple element " + std::to_string(v) + " outside carrier");
  return tuple;
}

// "name/arity:" with the trailing colon required.
std::pair<std::string, int> parse_symbol_decl(const std::string& tok) {
  if (tok.empty() || tok.back() != ':')
    throw DomainError("expected 'name/arity:' declaration, got '" + tok + "'");
  const std::string decl = tok.substr(0, tok.size() - 1);
  const std::size_t slash = decl.find('/');
  if (slash == std::string::npos || slash == 0)
    throw DomainError("expected 'name/arity:' declaration, got '" + tok + "'");
  const std::string name = decl.substr(0, slash);
  int arity = 0;
  try {
    arity = std::stoi(decl.substr(slash + 1));
  } catch (const std::exception&) {
    throw DomainError("bad arity in declaration '" + tok + "'");
  }
  if (arity < 0) throw DomainError("negative arity in declaration '" + tok + "'");
  return {name, arity};
}

} // namespace

Structure parse_structure(std::string_view text) {
  StructureScanner scan{std::istringstream(std::string(text)), {}};
  if (!scan.next()) throw DomainError("empty structure description");
  Structure m;
  try {
    m.carrier = std::stoi(scan.tok);
  } catch (const std::exception&) {
    throw DomainError("expected carrier size, got '" + scan.tok + "'");
  }
  if (m.carrier < 1) throw DomainError("carrier size must be >= 1");

  bool pending = scan.next();
  while (pending) {
    const bool is_fun = scan.tok == "fun";
    const bool is_pred = scan.tok == "pred";
    if (!is_fun && !is_pred)
      throw DomainError("expected 'fun' or 'pred', got '" + scan.tok + "'");
    if (!scan.next()) throw DomainError("missing symbol declaration after '" + scan.tok + "'");
    const auto [name, arity] = parse_symbol_decl(scan.tok);
    if (m.functions.contains(name) || m.predicates.contains(name))
      throw DomainError("duplicate symbol '" + name + "'");

    const std::size_t size = table_size(m.carrier, arity);
    if (is_fun) {
      FunTable table{arity, std::vector<int>(size, -1)};
      while ((pending = scan.next()) && scan.tok != "fun" && scan.tok != "pred") {
        const std::size_t eq = scan.tok.find('=');
        if (eq == std::string::npos)
          throw DomainError("expected tuple=value entry, got '" + scan.tok + "'");
        const auto tuple = parse_tuple(scan.tok.substr(0, eq), arity, m.carrier);
        int value = 0;
        try {
          value = std::stoi(scan.tok.substr(eq + 1));
        } catch (const std::exception&) {
          throw DomainError("bad value in entry '" + scan.tok + "'");
        }
        if (value < 0 || value >= m.carrier)
          throw DomainError("value " + std::to_string(value) + " outside carrier");
        auto& slot = table.values[tuple_rank(tuple, m.carrier)];
        if (slot != -1) throw DomainError("duplicate entry for '" + name + "'");
        slot = value;
      }
      for (std::size_t i = 0; i < size; ++i)
        if (table.values[i] == -1)
          throw DomainError("partial table for function '" + name + "'");
      m.functions[name] = std::move(table);
    } else {
      PredTable table{arity, std::vector<bool>(size, false)};
      while ((pending = scan.next()) && scan.tok != "fun" && scan.tok != "pred") {
        const auto tuple = parse_tuple(scan.tok, arity, m.carrier);
        table.truth[tuple_rank(tuple, m.carrier)] = true;
      }
      m.predicates[name] = std::move(table);
    }
  }
  return m;
}

std::string print_structure(const Structure& m) {
  std::ostringstream os;
  os << m.carrier << '\n';
  for (const auto& [name, table] : m.functions) {
    os << "fun " << name << '/' << table.arity << ':';
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      os << ' ';
      print_tuple(os, tuple_unrank(i, table.arity, m.carrier));
      os << '=' << table.values[i];
    }
    os << '\n';
  }
  for (const auto& [name, table] : m.predicates) {
    os << "pred " << name << '/' << table.arity << ':';
    for (std::size_t i = 0; i < table.truth.size(); ++i) {
      if (!table.truth[i]) continue;
      os << ' ';
      print_tuple(os, tuple_unrank(i, table.arity, m.carrier));
    }
    os << '\n';
  }
  return os.str();
}

std::uint64_t structure_count(const Signature& sig, int carrier) {
  constexpr std::uint64_t kMax = UINT64_MAX;
  long double total = 1;
  for (const auto& [name, arity] : sig.functions) {
    const std::size_t cells = table_size(carrier, arity);
    for (std::size_t i = 0; i < cells; ++i) {
      total *= carrier;
      if (total > static_cast<long double>(kMax)) return kMax;
    }
  }
  for (const auto& [name, arity] : sig.predicates) {
    const std::size_t cells = table_size(carrier, arity);
    for (std::size_t i = 0; i < cells; ++i) {
      total *= 2;
      if (total > static_cast<long double>(kMax)) return kMax;
    }
  }
  return static_cast<std::uint64_t>(total);
}

void for_each_structure(const Signature& sig, int carrier,
                        const std::function<bool(const Structure&)>& visit) {
  validate_signature(sig);
  Structure m;
  m.carrier = carrier;
  for (const auto& [name, arity] : sig.functions)
    m.functions[name] = FunTable{arity, std::vector<int>(table_size(carrier, arity), 0)};
  for (const auto& [name, arity] : sig.predicates)
    m.predicates[name] = PredTable{arity, std::vector<bool>(table_size(carrier, arity), false)};

  while (true) {
    if (!visit(m)) return;
    // Odometer: functions first (by name), then predicates, last cell fastest.
    bool carried = true;
    for (auto it = m.predicates.rbegin(); carried && it != m.predicates.rend(); ++it) {
      auto& truth = it->second.truth;
      for (std::size_t i = truth.size(); carried && i-- > 0;) {
        if (!truth[i]) {
          truth[i] = true;
          carried = false;
        } else {
          truth[i] = false;
        }
      }
    }
    for (auto it = m.functions.rbegin(); carried && it != m.functions.rend(); ++it) {
      auto& values = it->second.values;
      for (std::size_t i = values.size(); carried && i-- > 0;) {
        if (values[i] + 1 < carrier) {
          ++values[i];
          carried = false;
        } else {
          values[i] = 0;
        }
      }
    }
    if (carried) return; // wrapped around: all structures visited
  }
}

} // namespace genoid
