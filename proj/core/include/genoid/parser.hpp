#pragma once

#include <string_view>

#include "genoid/formula.hpp"
#include "genoid/named.hpp"
#include "genoid/term.hpp"

namespace genoid {

// Recursive-descent parsers for the shared concrete syntax. Each consumes
// the whole input and throws ParseError (with a byte offset) otherwise.
//
//   term    := '\' '.' term | appchain
//   appchain:= postfix+                      application, left-assoc
//   postfix := atom ('[' subst ']')*
//   atom    := xN | I | K | S | ident '(' [term (',' term)*] ')' | '(' term ')'
//
//   subst   := term '.' subst | compchain
//   compchain := satom (';' subst)?
//   satom   := 'id' | '^' | '(' subst ')'
//
//   formula := orchain ('->' formula)?       implication, right-assoc
//   orchain := andchain ('|' andchain)*
//   andchain:= funary ('&' funary)*
//   funary  := '~' funary | 'exists' [xN] '.' formula | fpostfix
//   fpostfix:= fatom ('[' subst ']')*
//   fatom   := 'false' | ident '(' [term (',' term)*] ')' | '(' formula ')'
//
//   named   := ident | '\' ident '.' named | named named | '(' named ')'
//
// ~, & and | desugar to the derived connectives; `exists xI.` desugars via
// exists_xi; I, K and S are the usual combinators.
TermPtr parse_term(std::string_view text);
SubstPtr parse_subst(std::string_view text);
FormulaPtr parse_formula(std::string_view text);
NamedPtr parse_named(std::string_view text);

} // namespace genoid
