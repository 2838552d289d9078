#include "genoid/printer.hpp"

#include <ostream>
#include <sstream>

namespace genoid {

namespace {

// Term precedence levels: 0 full term, 1 application operand chain,
// 2 postfix/atom position.
void emit_term(std::ostream& os, const TermPtr& t, int level);

void emit_subst(std::ostream& os, const SubstPtr& u, int level);

void emit_term(std::ostream& os, const TermPtr& t, int level) {
  std::visit(
      overloaded{
          [&](const Var& v) { os << 'x' << v.index; },
          [&](const App& n) {
            const bool parens = level > 1;
            if (parens) os << '(';
            emit_term(os, n.fn, 1);
            os << ' ';
            emit_term(os, n.arg, 2);
            if (parens) os << ')';
          },
          [&](const Lam& n) {
            const bool parens = level > 0;
            if (parens) os << '(';
            os << "\\. ";
            emit_term(os, n.body, 0);
            if (parens) os << ')';
          },
          [&](const FunApp& n) {
            os << n.sym << '(';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
              if (i) os << ", ";
              emit_term(os, n.args[i], 0);
            }
            os << ')';
          },
          [&](const Closure& n) {
            emit_term(os, n.body, 2);
            os << '[';
            emit_subst(os, n.subst, 0);
            os << ']';
          },
      },
      t->node);
}

// Subst levels: 0 full substitution, 1 composition operand position.
void emit_subst(std::ostream& os, const SubstPtr& u, int level) {
  std::visit(
      overloaded{
          [&](const Id&) { os << "id"; },
          [&](const Shift&) { os << '^'; },
          [&](const Cons& n) {
            const bool parens = level > 0;
            if (parens) os << '(';
            emit_term(os, n.head, 0);
            os << " . ";
            emit_subst(os, n.tail, 0);
            if (parens) os << ')';
          },
          [&](const Comp& n) {
            const bool parens = level > 0;
            if (parens) os << '(';
            emit_subst(os, n.first, 1);
            os << " ; ";
            emit_subst(os, n.second, 0);
            if (parens) os << ')';
          },
      },
      u->node);
}

// Formula levels: 0 full formula, 1 implication operand, 2 postfix position.
void emit_formula(std::ostream& os, const FormulaPtr& f, int level) {
  std::visit(
      overloaded{
          [&](const Atom& n) {
            os << n.sym << '(';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
              if (i) os << ", ";
              emit_term(os, n.args[i], 0);
            }
            os << ')';
          },
          [&](const Falsum&) { os << "false"; },
          [&](const Implies& n) {
            const bool parens = level > 0;
            if (parens) os << '(';
            emit_formula(os, n.lhs, 1);
            os << " -> ";
            emit_formula(os, n.rhs, 0);
            if (parens) os << ')';
          },
          [&](const Exists& n) {
            const bool parens = level > 0;
            if (parens) os << '(';
            os << "exists. ";
            emit_formula(os, n.body, 0);
            if (parens) os << ')';
          },
          [&](const SubF& n) {
            emit_formula(os, n.body, 2);
            os << '[';
            emit_subst(os, n.subst, 0);
            os << ']';
          },
      },
      f->node);
}

void emit_named(std::ostream& os, const NamedPtr& t, int level) {
  std::visit(
      overloaded{
          [&](const NVar& v) { os << v.name; },
          [&](const NLam& n) {
            const bool parens = level > 0;
            if (parens) os << '(';
            os << '\\' << n.binder << ". ";
            emit_named(os, n.body, 0);
            if (parens) os << ')';
          },
          [&](const NApp& n) {
            const bool parens = level > 1;
            if (parens) os << '(';
            emit_named(os, n.fn, 1);
            os << ' ';
            emit_named(os, n.arg, 2);
            if (parens) os << ')';
          },
      },
      t->node);
}

template <class Ptr, class Emit>
std::string render(const Ptr& p, Emit emit) {
  std::ostringstream os;
  emit(os, p, 0);
  return os.str();
}

} // namespace

std::string print_term(const TermPtr& t) { return render(t, [](auto& os, auto& p, int l) { emit_term(os, p, l); }); }
std::string print_subst(const SubstPtr& u) { return render(u, [](auto& os, auto& p, int l) { emit_subst(os, p, l); }); }
std::string print_formula(const FormulaPtr& f) { return render(f, [](auto& os, auto& p, int l) { emit_formula(os, p, l); }); }
std::string print_named(const NamedPtr& t) { return render(t, [](auto& os, auto& p, int l) { emit_named(os, p, l); }); }

std::ostream& operator<<(std::ostream& os, const TermPtr& t) {
  emit_term(os, t, 0);
  return os;
}
std::ostream& operator<<(std::ostream& os, const SubstPtr& u) {
  emit_subst(os, u, 0);
  return os;
}
std::ostream& operator<<(std::ostream& os, const FormulaPtr& f) {
  emit_formula(os, f, 0);
  return os;
}
std::ostream& operator<<(std::ostream& os, const NamedPtr& t) {
  emit_named(os, t, 0);
  return os;
}

} // namespace genoid
