#include "genoid/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace genoid {

namespace {

enum class Tok {
  Backslash,
  Dot,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Arrow,
  Tilde,
  Amp,
  Pipe,
  Caret,
  Ident,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto simple = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), i});
    i += len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '\\': simple(Tok::Backslash, 1); continue;
      case '.': simple(Tok::Dot, 1); continue;
      case '(': simple(Tok::LParen, 1); continue;
      case ')': simple(Tok::RParen, 1); continue;
      case '[': simple(Tok::LBracket, 1); continue;
      case ']': simple(Tok::RBracket, 1); continue;
      case ';': simple(Tok::Semi, 1); continue;
      case ',': simple(Tok::Comma, 1); continue;
      case '~': simple(Tok::Tilde, 1); continue;
      case '&': simple(Tok::Amp, 1); continue;
      case '|': simple(Tok::Pipe, 1); continue;
      case '^': simple(Tok::Caret, 1); continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          simple(Tok::Arrow, 2);
          continue;
        }
        throw ParseError("stray '-'", i);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

/// xN with N >= 1 and no leading zero.
std::optional<int> var_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x') return std::nullopt;
  if (name[1] == '0') return std::nullopt;
  long value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    value = value * 10 + (name[i] - '0');
    if (value > 1'000'000) return std::nullopt;
  }
  return static_cast<int>(value);
}

TermPtr make_combinator(const std::string& name) {
  if (name == "I") return lam(var(1));
  if (name == "K") return lam(lam(var(2)));
  if (name == "S")
    return lam(lam(lam(app(app(var(3), var(1)), app(var(2), var(1))))));
  return nullptr;
}

struct Parser {
  std::vector<Token> tokens;
  std::size_t at = 0;

  const Token& peek() const { return tokens[at]; }
  const Token& next() { return tokens[at++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++at;
    return true;
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) throw ParseError(std::string("expected ") + what, peek().pos);
  }

  // ---- terms ----

  TermPtr term() {
    if (accept(Tok::Backslash)) {
      expect(Tok::Dot, "'.' after '\\'");
      return lam(term());
    }
    TermPtr t = postfix();
    while (starts_atom() || peek().kind == Tok::Backslash) {
      if (peek().kind == Tok::Backslash) {
        next();
        expect(Tok::Dot, "'.' after '\\'");
        return app(std::move(t), lam(term()));
      }
      t = app(std::move(t), postfix());
    }
    return t;
  }

  bool starts_atom() const {
    return peek().kind == Tok::Ident || peek().kind == Tok::LParen;
  }

  TermPtr postfix() {
    TermPtr t = atom();
    while (accept(Tok::LBracket)) {
      SubstPtr u = subst();
      expect(Tok::RBracket, "']'");
      t = closure(std::move(t), std::move(u));
    }
    return t;
  }

  TermPtr atom() {
    const Token& tok = peek();
    if (tok.kind == Tok::LParen) {
      next();
      TermPtr t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (tok.kind != Tok::Ident) throw ParseError("expected a term", tok.pos);
    next();
    // Variables and combinator sugar never take an argument list; a '('
    // after them opens a juxtaposed application operand instead.
    if (auto i = var_index(tok.text)) return var(*i);
    if (TermPtr c = make_combinator(tok.text)) return c;
    if (peek().kind == Tok::LParen) {
      next();
      std::vector<TermPtr> args;
      if (!accept(Tok::RParen)) {
        args.push_back(term());
        while (accept(Tok::Comma)) args.push_back(term());
        expect(Tok::RParen, "')'");
      }
      if (reserved_symbol(tok.text))
        throw ParseError("'" + tok.text + "' is reserved and cannot be a function symbol",
                         tok.pos);
      return fun_app(tok.text, std::move(args));
    }
    throw ParseError("unknown identifier '" + tok.text + "' (expected xN, I, K, S or f(...))",
                     tok.pos);
  }

  // ---- substitutions ----

  SubstPtr subst() {
    // A cons head is a term followed by '.'; a '(' may open either a
    // parenthesized term or a parenthesized substitution, so try the cons
    // reading first and backtrack. Only the head parse may backtrack;
    // errors in the tail are real.
    const std::size_t mark = at;
    if (peek().kind == Tok::Ident || peek().kind == Tok::LParen ||
        peek().kind == Tok::Backslash) {
      TermPtr head;
      try {
        TermPtr h = term();
        if (peek().kind == Tok::Dot) head = std::move(h);
      } catch (const ParseError&) {
      }
      if (head) {
        next(); // the '.'
        return cons(std::move(head), subst());
      }
      at = mark;
    }
    return comp_chain();
  }

  SubstPtr comp_chain() {
    SubstPtr left = subst_atom();
    if (accept(Tok::Semi)) return comp(std::move(left), subst());
    return left;
  }

  SubstPtr subst_atom() {
    const Token& tok = peek();
    if (tok.kind == Tok::Caret) {
      next();
      return subst_shift();
    }
    if (tok.kind == Tok::Ident && tok.text == "id") {
      next();
      return subst_id();
    }
    if (tok.kind == Tok::LParen) {
      next();
      SubstPtr u = subst();
      expect(Tok::RParen, "')'");
      return u;
    }
    throw ParseError("expected a substitution", tok.pos);
  }

  // ---- formulas ----

  FormulaPtr formula() {
    FormulaPtr lhs = or_chain();
    if (accept(Tok::Arrow)) return implies(std::move(lhs), formula());
    return lhs;
  }

  FormulaPtr or_chain() {
    FormulaPtr f = and_chain();
    while (accept(Tok::Pipe)) f = disj(std::move(f), and_chain());
    return f;
  }

  FormulaPtr and_chain() {
    FormulaPtr f = f_unary();
    while (accept(Tok::Amp)) f = conj(std::move(f), f_unary());
    return f;
  }

  FormulaPtr f_unary() {
    if (accept(Tok::Tilde)) return neg(f_unary());
    if (peek().kind == Tok::Ident && peek().text == "exists") {
      next();
      std::optional<int> index;
      if (peek().kind == Tok::Ident) {
        index = var_index(peek().text);
        if (!index) throw ParseError("expected xN or '.' after 'exists'", peek().pos);
        next();
      }
      expect(Tok::Dot, "'.' after 'exists'");
      FormulaPtr body = formula(); // binder scope extends maximally right
      return index ? exists_xi(*index, body) : exists(std::move(body));
    }
    return f_postfix();
  }

  FormulaPtr f_postfix() {
    FormulaPtr f = f_atom();
    while (accept(Tok::LBracket)) {
      SubstPtr u = subst();
      expect(Tok::RBracket, "']'");
      f = subf(std::move(f), std::move(u));
    }
    return f;
  }

  FormulaPtr f_atom() {
    const Token& tok = peek();
    if (tok.kind == Tok::LParen) {
      next();
      FormulaPtr f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (tok.kind != Tok::Ident) throw ParseError("expected a formula", tok.pos);
    if (tok.text == "false") {
      next();
      return falsum();
    }
    next();
    expect(Tok::LParen, "'(' after predicate symbol");
    std::vector<TermPtr> args;
    if (!accept(Tok::RParen)) {
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "')'");
    }
    return atom_f(tok.text, std::move(args), tok.pos);
  }

  static FormulaPtr atom_f(const std::string& sym, std::vector<TermPtr> args, std::size_t pos) {
    if (reserved_symbol(sym))
      throw ParseError("'" + sym + "' is reserved and cannot be a predicate symbol", pos);
    return genoid::atom(sym, std::move(args));
  }

  // ---- named terms ----

  NamedPtr named() {
    if (accept(Tok::Backslash)) {
      const Token& binder = peek();
      expect(Tok::Ident, "binder name after '\\'");
      expect(Tok::Dot, "'.' after binder");
      return nlam(binder.text, named());
    }
    NamedPtr t = named_atom();
    while (peek().kind == Tok::Ident || peek().kind == Tok::LParen ||
           peek().kind == Tok::Backslash) {
      if (peek().kind == Tok::Backslash) {
        next();
        const Token& binder = peek();
        expect(Tok::Ident, "binder name after '\\'");
        expect(Tok::Dot, "'.' after binder");
        return napp(std::move(t), nlam(binder.text, named()));
      }
      t = napp(std::move(t), named_atom());
    }
    return t;
  }

  NamedPtr named_atom() {
    const Token& tok = peek();
    if (tok.kind == Tok::LParen) {
      next();
      NamedPtr t = named();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (tok.kind != Tok::Ident) throw ParseError("expected a named term", tok.pos);
    next();
    return nvar(tok.text);
  }

  void done() {
    if (peek().kind != Tok::End) throw ParseError("trailing input", peek().pos);
  }
};

} // namespace

TermPtr parse_term(std::string_view text) {
  Parser p{tokenize(text)};
  TermPtr t = p.term();
  p.done();
  return t;
}

SubstPtr parse_subst(std::string_view text) {
  Parser p{tokenize(text)};
  SubstPtr u = p.subst();
  p.done();
  return u;
}

FormulaPtr parse_formula(std::string_view text) {
  Parser p{tokenize(text)};
  FormulaPtr f = p.formula();
  p.done();
  return f;
}

NamedPtr parse_named(std::string_view text) {
  Parser p{tokenize(text)};
  NamedPtr t = p.named();
  p.done();
  return t;
}

} // namespace genoid
