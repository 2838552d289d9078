#include "genoid/random.hpp"

namespace genoid {

namespace {

int pick(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

const std::pair<const std::string, int>* pick_symbol(std::mt19937_64& rng,
                                                     const std::map<std::string, int>& symbols) {
  if (symbols.empty()) return nullptr;
  int i = pick(rng, static_cast<int>(symbols.size()));
  for (const auto& entry : symbols)
    if (i-- == 0) return &entry;
  return nullptr;
}

} // namespace

TermPtr random_term(std::mt19937_64& rng, const TermGenConfig& cfg) {
  if (cfg.max_depth <= 0) return var(1 + pick(rng, cfg.max_index));

  TermGenConfig child = cfg;
  child.max_depth = cfg.max_depth - 1;

  enum { kVar, kApp, kLam, kFun, kClosure };
  std::vector<int> choices{kVar, kApp};
  if (cfg.allow_lam) choices.push_back(kLam);
  if (cfg.sig && !cfg.sig->functions.empty()) choices.push_back(kFun);
  if (cfg.allow_closure) choices.push_back(kClosure);

  switch (choices[static_cast<std::size_t>(pick(rng, static_cast<int>(choices.size())))]) {
    case kVar: return var(1 + pick(rng, cfg.max_index));
    case kApp: return app(random_term(rng, child), random_term(rng, child));
    case kLam: return lam(random_term(rng, child));
    case kFun: {
      const auto* sym = pick_symbol(rng, cfg.sig->functions);
      std::vector<TermPtr> args;
      args.reserve(static_cast<std::size_t>(sym->second));
      for (int i = 0; i < sym->second; ++i) args.push_back(random_term(rng, child));
      return fun_app(sym->first, std::move(args));
    }
    default: return closure(random_term(rng, child), random_subst(rng, child));
  }
}

SubstPtr random_subst(std::mt19937_64& rng, const TermGenConfig& cfg) {
  if (cfg.max_depth <= 0) return pick(rng, 2) == 0 ? subst_id() : subst_shift();

  TermGenConfig child = cfg;
  child.max_depth = cfg.max_depth - 1;

  switch (pick(rng, 4)) {
    case 0: return subst_id();
    case 1: return subst_shift();
    case 2: return cons(random_term(rng, child), random_subst(rng, child));
    default: return comp(random_subst(rng, child), random_subst(rng, child));
  }
}

TermPtr random_pure_term(std::mt19937_64& rng, int max_size, int max_index) {
  if (max_size <= 1) return var(1 + pick(rng, max_index));
  switch (pick(rng, 3)) {
    case 0: return var(1 + pick(rng, max_index));
    case 1: return lam(random_pure_term(rng, max_size - 1, max_index));
    default: {
      const int left = 1 + pick(rng, max_size - 1);
      return app(random_pure_term(rng, left, max_index),
                 random_pure_term(rng, max_size - left, max_index));
    }
  }
}

TermPtr random_first_order_term(std::mt19937_64& rng, const FirstOrderGenConfig& cfg) {
  const bool has_funs = cfg.sig && !cfg.sig->functions.empty();
  if (cfg.max_depth <= 0 || !has_funs || pick(rng, 2) == 0)
    return var(1 + pick(rng, cfg.max_index));

  FirstOrderGenConfig child = cfg;
  child.max_depth = cfg.max_depth - 1;
  const auto* sym = pick_symbol(rng, cfg.sig->functions);
  std::vector<TermPtr> args;
  args.reserve(static_cast<std::size_t>(sym->second));
  for (int i = 0; i < sym->second; ++i) args.push_back(random_first_order_term(rng, child));
  return fun_app(sym->first, std::move(args));
}

SubstPtr random_first_order_subst(std::mt19937_64& rng, const FirstOrderGenConfig& cfg,
                                  int depth) {
  if (depth <= 0) return pick(rng, 2) == 0 ? subst_id() : subst_shift();
  switch (pick(rng, 4)) {
    case 0: return subst_id();
    case 1: return subst_shift();
    case 2:
      return cons(random_first_order_term(rng, cfg),
                  random_first_order_subst(rng, cfg, depth - 1));
    default:
      return comp(random_first_order_subst(rng, cfg, depth - 1),
                  random_first_order_subst(rng, cfg, depth - 1));
  }
}

FormulaPtr random_formula(std::mt19937_64& rng, const FormulaGenConfig& cfg) {
  if (!cfg.sig || cfg.sig->predicates.empty())
    throw DomainError("random_formula needs a signature with predicates");

  const auto make_atom = [&] {
    const auto* sym = pick_symbol(rng, cfg.sig->predicates);
    FirstOrderGenConfig terms;
    terms.sig = cfg.sig;
    terms.max_index = cfg.max_index;
    terms.max_depth = 2;
    std::vector<TermPtr> args;
    args.reserve(static_cast<std::size_t>(sym->second));
    for (int i = 0; i < sym->second; ++i) args.push_back(random_first_order_term(rng, terms));
    return atom(sym->first, std::move(args));
  };

  if (cfg.max_depth <= 0) return make_atom();

  FormulaGenConfig child = cfg;
  child.max_depth = cfg.max_depth - 1;

  const int n_choices = cfg.allow_subf ? 5 : 4;
  switch (pick(rng, n_choices)) {
    case 0: return make_atom();
    case 1: return falsum();
    case 2: return implies(random_formula(rng, child), random_formula(rng, child));
    case 3: return exists(random_formula(rng, child));
    default: {
      FirstOrderGenConfig substs;
      substs.sig = cfg.sig;
      substs.max_index = cfg.max_index;
      substs.max_depth = 2;
      return subf(random_formula(rng, child), random_first_order_subst(rng, substs, 2));
    }
  }
}

Structure random_structure(std::mt19937_64& rng, const Signature& sig, int carrier) {
  validate_signature(sig);
  Structure m;
  m.carrier = carrier;
  for (const auto& [name, arity] : sig.functions) {
    std::size_t cells = 1;
    for (int i = 0; i < arity; ++i) cells *= static_cast<std::size_t>(carrier);
    FunTable table{arity, std::vector<int>(cells)};
    for (auto& v : table.values) v = pick(rng, carrier);
    m.functions[name] = std::move(table);
  }
  for (const auto& [name, arity] : sig.predicates) {
    std::size_t cells = 1;
    for (int i = 0; i < arity; ++i) cells *= static_cast<std::size_t>(carrier);
    PredTable table{arity, std::vector<bool>(cells)};
    for (std::size_t i = 0; i < cells; ++i) table.truth[i] = pick(rng, 2) == 1;
    m.predicates[name] = std::move(table);
  }
  return m;
}

Assignment random_assignment(std::mt19937_64& rng, int carrier, int length) {
  Assignment env;
  env.values.resize(static_cast<std::size_t>(length));
  for (auto& v : env.values) v = pick(rng, carrier);
  env.pad = pick(rng, carrier);
  return env;
}

} // namespace genoid
