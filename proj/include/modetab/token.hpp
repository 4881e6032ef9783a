#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modetab/term.hpp"

namespace modetab {

enum class TokenKind : std::uint8_t { Functor, Atom, Int, Float, Var };

/// One trie label. Variables become positional `VARi` constants.
class Token {
 public:
  static Token functor(Symbol name, std::uint32_t arity);
  static Token atom(Symbol name);
  static Token integer(std::int64_t value);
  static Token floating(double value);
  static Token var(std::uint32_t ordinal);
  /// Token for an atomic term (atom, int or float).
  static Token of_atomic(const Term& t);

  TokenKind kind() const { return kind_; }
  std::uint32_t arity() const { return arity_; }
  Symbol symbol() const { return Symbol::from_id(static_cast<std::uint32_t>(payload_)); }
  std::int64_t as_int() const { return static_cast<std::int64_t>(payload_); }
  double as_float() const;
  std::uint32_t var_ordinal() const { return static_cast<std::uint32_t>(payload_); }

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind_ == b.kind_ && a.arity_ == b.arity_ && a.payload_ == b.payload_;
  }
  std::size_t hash() const {
    return (payload_ * 0x9e3779b97f4a7c15ULL) ^ (std::size_t(kind_) << 56) ^ arity_;
  }

 private:
  TokenKind kind_ = TokenKind::Atom;
  std::uint32_t arity_ = 0;
  std::uint64_t payload_ = 0;
};

struct TokenHash {
  std::size_t operator()(const Token& t) const { return t.hash(); }
};

using TokenSeq = std::vector<Token>;

/// Variable numbering shared across a multi-term encoding: first
/// occurrence gets the next VARi ordinal.
class VarNumbering {
 public:
  std::uint32_t ordinal(VarId v);
  /// Variables in the order they were numbered.
  const std::vector<VarId>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

 private:
  std::vector<VarId> order_;
};

/// Appends the preorder token flattening of `term`.
void tokenize_into(const Term& term, VarNumbering& vars, TokenSeq& out);
TokenSeq tokenize(std::span<const Term> terms, VarNumbering& vars);
TokenSeq tokenize(const Term& term);

/// Inverse of tokenize: decodes a sequence of complete terms. `VARi`
/// decodes to Term::var(i). Throws StructureError on malformed input.
std::vector<Term> decode(std::span<const Token> seq);

/// Number of tokens still needed to finish the current term, tracking a
/// token-by-token walk; starts at 1 for a single term.
inline void consume_token(const Token& t, std::size_t& pending) {
  pending -= 1;
  if (t.kind() == TokenKind::Functor) pending += t.arity();
}

std::string to_string(const Token& t);
std::string to_string(std::span<const Token> seq);

}  // namespace modetab
