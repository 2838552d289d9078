#pragma once

#include <iosfwd>
#include <string>

#include "genoid/formula.hpp"
#include "genoid/named.hpp"
#include "genoid/term.hpp"

namespace genoid {

// Emitters for the shared concrete syntax. parse(print(x)) == x for every
// AST; the printers never use the sugar forms (~, &, |, I/K/S) the parsers
// accept.
std::string print_term(const TermPtr& t);
std::string print_subst(const SubstPtr& u);
std::string print_formula(const FormulaPtr& f);
std::string print_named(const NamedPtr& t);

std::ostream& operator<<(std::ostream& os, const TermPtr& t);
std::ostream& operator<<(std::ostream& os, const SubstPtr& u);
std::ostream& operator<<(std::ostream& os, const FormulaPtr& f);
std::ostream& operator<<(std::ostream& os, const NamedPtr& t);

} // namespace genoid
