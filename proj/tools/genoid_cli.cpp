#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "genoid/clone.hpp"
#include "genoid/formula.hpp"
#include "genoid/lambda.hpp"
#include "genoid/named.hpp"
#include "genoid/parser.hpp"
#include "genoid/printer.hpp"
#include "genoid/sigma.hpp"
#include "genoid/suites.hpp"
#include "genoid/validity.hpp"

namespace {

using nlohmann::json;
using namespace genoid;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;    // parse or domain errors
constexpr int kExitExhausted = 2; // fuel or enumeration-cap exhaustion

/// Positional inputs may name files; anything else is taken literally.
std::string load_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream text;
    text << in.rdbuf();
    std::string s = text.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
  }
  return arg;
}

struct TermOptions {
  std::string syntax = "debruijn";
  std::uint64_t fuel = kDefaultFuel;
  bool no_beta = false;
  bool no_eta = false;
  std::string format = "text";
  std::string input;

  LambdaFlags flags() const { return {!no_beta, !no_eta, fuel}; }
  bool named() const { return syntax == "named"; }

  TermPtr parse() const {
    const std::string text = load_input(input);
    return named() ? to_debruijn(parse_named(text)) : parse_term(text);
  }
  std::string show(const TermPtr& t) const {
    return named() ? print_named(from_debruijn(t)) : print_term(t);
  }
};

void add_term_options(CLI::App* cmd, TermOptions& opts, bool reduction_flags) {
  cmd->add_option("--syntax", opts.syntax, "Input grammar: debruijn or named")
      ->check(CLI::IsMember({"debruijn", "named"}));
  cmd->add_option("--fuel", opts.fuel, "Step budget for beta/eta reduction");
  if (reduction_flags) {
    cmd->add_flag("--no-beta", opts.no_beta, "Do not orient the beta law");
    cmd->add_flag("--no-eta", opts.no_eta, "Do not orient the eta law");
  }
  cmd->add_option("--format", opts.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("input", opts.input, "Term (or @file path)")->required();
}

int run_norm(const TermOptions& opts) {
  const auto report = beta_eta_normalize(opts.parse(), opts.flags());
  const std::string shown = opts.show(report.result);
  if (opts.format == "json") {
    json out{{"command", "norm"},
             {"result", shown},
             {"steps", report.steps},
             {"status", report.normal() ? "normal" : "fuel-exhausted"}};
    std::cout << out.dump() << "\n";
  } else if (report.normal()) {
    std::cout << shown << "\n";
  } else {
    std::cout << "fuel-exhausted after " << report.steps << " steps: " << shown << "\n";
  }
  return report.normal() ? kExitOk : kExitExhausted;
}

int run_rank(const TermOptions& opts) {
  const int rank = finite_rank(opts.parse());
  if (opts.format == "json")
    std::cout << json{{"command", "rank"}, {"rank", rank}}.dump() << "\n";
  else
    std::cout << rank << "\n";
  return kExitOk;
}

int run_close(const TermOptions& opts) {
  const ClosureResult closed = closure_of(opts.parse());
  if (opts.format == "json") {
    json out{{"command", "close"}, {"closed", opts.show(closed.closed)}, {"rank", closed.rank}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "rank: " << closed.rank << "\n";
    std::cout << "closed: " << opts.show(closed.closed) << "\n";
  }
  return kExitOk;
}

struct EvalOptions {
  std::string model_path;
  std::string env_text;
  int pad = 0;
  std::string format = "text";
  std::string input;
};

Assignment parse_env(const std::string& text, int pad, int carrier) {
  Assignment env;
  env.pad = pad;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    env.values.push_back(std::stoi(part));
  }
  for (int v : env.values)
    if (v < 0 || v >= carrier) throw DomainError("assignment value outside carrier");
  if (pad < 0 || pad >= carrier) throw DomainError("pad element outside carrier");
  return env;
}

int run_eval(const EvalOptions& opts) {
  std::ifstream model_file(opts.model_path);
  if (!model_file) throw DomainError("cannot open model file '" + opts.model_path + "'");
  std::ostringstream model_text;
  model_text << model_file.rdbuf();
  const Structure m = parse_structure(model_text.str());
  const Assignment env = parse_env(opts.env_text, opts.pad, m.carrier);

  const std::string text = load_input(opts.input);

  // A bare term over the model's function symbols evaluates to a carrier
  // element; everything else is read as a formula.
  bool as_term = false;
  TermPtr term;
  try {
    term = norm_term(closure(parse_term(text), subst_id()));
    as_term = true;
    Signature sig;
    // Predicates parse as FunApp at the term level; fall through to the
    // formula reading when the head is really a predicate symbol.
    if (const auto* f = std::get_if<FunApp>(&term->node))
      if (m.predicates.contains(f->sym)) as_term = false;
  } catch (const ParseError&) {
    as_term = false;
  }

  if (as_term) {
    const int value = eval_term(term, m, env);
    if (opts.format == "json")
      std::cout << json{{"command", "eval"}, {"value", value}}.dump() << "\n";
    else
      std::cout << value << "\n";
  } else {
    const bool value = eval_formula(parse_formula(text), m, env);
    if (opts.format == "json")
      std::cout << json{{"command", "eval"}, {"value", value}}.dump() << "\n";
    else
      std::cout << (value ? "true" : "false") << "\n";
  }
  return kExitOk;
}

struct CheckOptions {
  int max_carrier = 3;
  std::string format = "text";
  std::string input;
  std::string second; // check-equiv only
};

json assignment_json(const Assignment& env) {
  return json{{"values", env.values}, {"pad", env.pad}};
}

int report_verdict(const Verdict& verdict, const std::string& format) {
  if (format == "json") {
    json out{{"bound", verdict.bound},
             {"status", verdict.invalid() ? "invalid" : "valid-up-to-bound"}};
    if (verdict.counterexample) {
      out["counterexample"] = {
          {"structure", print_structure(verdict.counterexample->structure)},
          {"assignment", assignment_json(verdict.counterexample->assignment)}};
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  if (!verdict.invalid()) {
    std::cout << "valid-up-to-bound " << verdict.bound << "\n";
    return kExitOk;
  }
  const auto& ce = *verdict.counterexample;
  std::cout << "invalid\n";
  std::cout << "counterexample structure:\n" << print_structure(ce.structure);
  std::cout << "assignment: [";
  for (std::size_t i = 0; i < ce.assignment.values.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << ce.assignment.values[i];
  }
  std::cout << "] pad=" << ce.assignment.pad << "\n";
  return kExitOk;
}

int run_check_valid(const CheckOptions& opts) {
  ValidityOptions vopts;
  vopts.max_carrier = opts.max_carrier;
  return report_verdict(check_validity(parse_formula(load_input(opts.input)), vopts),
                        opts.format);
}

int run_check_equiv(const CheckOptions& opts) {
  ValidityOptions vopts;
  vopts.max_carrier = opts.max_carrier;
  const FormulaPtr f = parse_formula(load_input(opts.input));
  const FormulaPtr g = parse_formula(load_input(opts.second));
  return report_verdict(check_equivalence(f, g, vopts), opts.format);
}

struct SelftestOptions {
  std::uint64_t seed = kDefaultSeed;
  bool quick = false;
  std::string format = "text";
};

int run_selftest(const SelftestOptions& opts) {
  if (opts.format == "text")
    std::cout << "selftest seed=" << opts.seed << (opts.quick ? " quick" : "") << "\n";
  const auto results = run_all_suites(opts.seed, opts.quick);
  bool all_ok = true;
  json suites = json::array();
  for (const auto& r : results) {
    all_ok = all_ok && r.ok();
    if (opts.format == "json") {
      suites.push_back({{"name", r.name},
                        {"cases", r.cases},
                        {"failures", r.failures_total},
                        {"ok", r.ok()}});
    } else {
      std::cout << (r.ok() ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases << " cases)";
      if (!r.ok()) std::cout << " " << r.failures_total << " failures";
      std::cout << "\n";
      for (const auto& f : r.failures) std::cout << "       " << f << "\n";
    }
  }
  if (opts.format == "json")
    std::cout << json{{"seed", opts.seed}, {"quick", opts.quick}, {"suites", suites},
                      {"ok", all_ok}}
                     .dump()
              << "\n";
  return all_ok ? kExitOk : kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"genoid: explicit-substitution term engine with lambda reduction,\n"
               "finite left-algebra evaluation and bounded first-order validity checking"};
  app.require_subcommand(1);

  TermOptions norm_opts;
  add_term_options(app.add_subcommand("norm", "Normalize a term"), norm_opts, true);

  TermOptions rank_opts;
  add_term_options(app.add_subcommand("rank", "Finite rank (largest free coordinate)"),
                   rank_opts, false);

  TermOptions close_opts;
  add_term_options(app.add_subcommand("close", "Closure: bind every free coordinate"),
                   close_opts, false);

  EvalOptions eval_opts;
  {
    auto* cmd = app.add_subcommand("eval", "Evaluate a term or formula in a finite structure");
    cmd->add_option("--model", eval_opts.model_path, "Structure file")->required();
    cmd->add_option("--env", eval_opts.env_text, "Assignment values, comma-separated");
    cmd->add_option("--pad", eval_opts.pad, "Padding element for coordinates past --env");
    cmd->add_option("--format", eval_opts.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("input", eval_opts.input, "Term or formula (or @file path)")->required();
  }

  CheckOptions valid_opts;
  {
    auto* cmd = app.add_subcommand("check-valid", "Bounded first-order validity check");
    cmd->add_option("--max-carrier", valid_opts.max_carrier, "Largest carrier size searched");
    cmd->add_option("--format", valid_opts.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("input", valid_opts.input, "Formula (or @file path)")->required();
  }

  CheckOptions equiv_opts;
  {
    auto* cmd = app.add_subcommand("check-equiv", "Bounded logical equivalence check");
    cmd->add_option("--max-carrier", equiv_opts.max_carrier, "Largest carrier size searched");
    cmd->add_option("--format", equiv_opts.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("first", equiv_opts.input, "First formula")->required();
    cmd->add_option("second", equiv_opts.second, "Second formula")->required();
  }

  SelftestOptions selftest_opts;
  {
    auto* cmd = app.add_subcommand("selftest", "Run every property suite");
    cmd->add_option("--seed", selftest_opts.seed, "Random seed (printed in the header)");
    cmd->add_flag("--quick", selftest_opts.quick, "Reduced sample counts");
    cmd->add_option("--format", selftest_opts.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("norm")) return run_norm(norm_opts);
    if (app.got_subcommand("rank")) return run_rank(rank_opts);
    if (app.got_subcommand("close")) return run_close(close_opts);
    if (app.got_subcommand("eval")) return run_eval(eval_opts);
    if (app.got_subcommand("check-valid")) return run_check_valid(valid_opts);
    if (app.got_subcommand("check-equiv")) return run_check_equiv(equiv_opts);
    if (app.got_subcommand("selftest")) return run_selftest(selftest_opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FuelError& e) {
    std::cerr << "fuel exhausted: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const CapacityError& e) {
    std::cerr << "enumeration cap exceeded: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
