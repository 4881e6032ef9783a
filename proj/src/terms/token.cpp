#include "modetab/token.hpp"

#include <algorithm>
#include <cstring>

#include "modetab/error.hpp"

namespace modetab {

Token Token::functor(Symbol name, std::uint32_t arity) {
  Token t;
  t.kind_ = TokenKind::Functor;
  t.arity_ = arity;
  t.payload_ = name.id();
  return t;
}

Token Token::atom(Symbol name) {
  Token t;
  t.kind_ = TokenKind::Atom;
  t.payload_ = name.id();
  return t;
}

Token Token::integer(std::int64_t value) {
  Token t;
  t.kind_ = TokenKind::Int;
  t.payload_ = static_cast<std::uint64_t>(value);
  return t;
}

Token Token::floating(double value) {
  Token t;
  t.kind_ = TokenKind::Float;
  std::memcpy(&t.payload_, &value, sizeof value);
  return t;
}

Token Token::var(std::uint32_t ordinal) {
  Token t;
  t.kind_ = TokenKind::Var;
  t.payload_ = ordinal;
  return t;
}

Token Token::of_atomic(const Term& t) {
  switch (t.kind()) {
    case TermKind::Int:
      return integer(t.as_int());
    case TermKind::Float:
      return floating(t.as_float());
    case TermKind::Atom:
      return atom(t.symbol());
    default:
      throw StructureError("of_atomic: term is not atomic");
  }
}

double Token::as_float() const {
  double d;
  std::memcpy(&d, &payload_, sizeof d);
  return d;
}

std::uint32_t VarNumbering::ordinal(VarId v) {
  // calls and answers carry few variables; a linear scan beats hashing
  auto it = std::find(order_.begin(), order_.end(), v);
  if (it != order_.end()) return static_cast<std::uint32_t>(it - order_.begin());
  order_.push_back(v);
  return static_cast<std::uint32_t>(order_.size() - 1);
}

void tokenize_into(const Term& term, VarNumbering& vars, TokenSeq& out) {
  switch (term.kind()) {
    case TermKind::Var:
      out.push_back(Token::var(vars.ordinal(term.var_id())));
      return;
    case TermKind::Struct:
      out.push_back(Token::functor(term.symbol(), static_cast<std::uint32_t>(term.arity())));
      for (const Term& a : term.args()) tokenize_into(a, vars, out);
      return;
    default:
      out.push_back(Token::of_atomic(term));
      return;
  }
}

TokenSeq tokenize(std::span<const Term> terms, VarNumbering& vars) {
  TokenSeq out;
  for (const Term& t : terms) tokenize_into(t, vars, out);
  return out;
}

TokenSeq tokenize(const Term& term) {
  VarNumbering vars;
  TokenSeq out;
  tokenize_into(term, vars, out);
  return out;
}

namespace {

Term decode_one(std::span<const Token> seq, std::size_t& pos, std::uint32_t& seen_vars) {
  if (pos >= seq.size()) throw StructureError("token sequence ends inside a term");
  const Token& t = seq[pos++];
  switch (t.kind()) {
    case TokenKind::Functor: {
      if (t.arity() == 0) throw StructureError("functor token with arity 0");
      std::vector<Term> args;
      args.reserve(t.arity());
      for (std::uint32_t i = 0; i < t.arity(); ++i) {
        args.push_back(decode_one(seq, pos, seen_vars));
      }
      return Term::compound(t.symbol(), std::move(args));
    }
    case TokenKind::Atom:
      return Term::atom(t.symbol());
    case TokenKind::Int:
      return Term::integer(t.as_int());
    case TokenKind::Float:
      return Term::floating(t.as_float());
    case TokenKind::Var:
      if (t.var_ordinal() > seen_vars) {
        throw StructureError("VAR" + std::to_string(t.var_ordinal()) +
                             " appears before VAR" + std::to_string(seen_vars));
      }
      if (t.var_ordinal() == seen_vars) ++seen_vars;
      return Term::var(t.var_ordinal());
  }
  throw StructureError("unknown token kind");
}

}  // namespace

std::vector<Term> decode(std::span<const Token> seq) {
  std::vector<Term> out;
  std::size_t pos = 0;
  std::uint32_t seen = 0;
  while (pos < seq.size()) out.push_back(decode_one(seq, pos, seen));
  return out;
}

std::string to_string(const Token& t) {
  switch (t.kind()) {
    case TokenKind::Functor:
      return t.symbol().name() + "/" + std::to_string(t.arity());
    case TokenKind::Atom:
      return to_string(Term::atom(t.symbol()));
    case TokenKind::Int:
      return std::to_string(t.as_int());
    case TokenKind::Float:
      return format_number(t.as_float());
    case TokenKind::Var:
      return "VAR" + std::to_string(t.var_ordinal());
  }
  return "?";
}

std::string to_string(std::span<const Token> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += to_string(seq[i]);
  }
  return out;
}

}  // namespace modetab
