#pragma once

#include <compare>
#include <functional>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modetab/symbol.hpp"

namespace modetab {

using VarId = std::uint64_t;

enum class TermKind : std::uint8_t { Int, Float, Atom, Var, Struct };

/// Immutable logic term. Compound arguments are shared between copies.
class Term {
 public:
  /// The atom `[]`; mostly useful as a placeholder.
  Term();

  static Term integer(std::int64_t value);
  static Term floating(double value);
  static Term atom(Symbol name);
  static Term atom(std::string_view name) { return atom(Symbol(name)); }
  static Term var(VarId id);
  /// Builds `functor(args...)`; an empty argument list yields the atom.
  static Term compound(Symbol functor, std::vector<Term> args);
  static Term compound(std::string_view functor, std::vector<Term> args) {
    return compound(Symbol(functor), std::move(args));
  }

  TermKind kind() const { return kind_; }
  bool is_int() const { return kind_ == TermKind::Int; }
  bool is_float() const { return kind_ == TermKind::Float; }
  bool is_number() const { return is_int() || is_float(); }
  bool is_atom() const { return kind_ == TermKind::Atom; }
  bool is_var() const { return kind_ == TermKind::Var; }
  bool is_compound() const { return kind_ == TermKind::Struct; }
  /// Atom or compound: something that can name a predicate.
  bool is_callable() const { return is_atom() || is_compound(); }

  std::int64_t as_int() const { return int_; }
  double as_float() const { return float_; }
  VarId var_id() const { return var_; }
  /// Name of an atom or functor of a compound.
  Symbol symbol() const { return symbol_; }
  std::size_t arity() const { return args_ ? args_->size() : 0; }
  const Term& arg(std::size_t i) const { return (*args_)[i]; }
  std::span<const Term> args() const {
    return args_ ? std::span<const Term>(*args_) : std::span<const Term>();
  }

  bool is_ground() const { return ground_; }

  /// Structural identity: same shape, same variables, same number tokens.
  friend bool operator==(const Term& a, const Term& b);

  std::size_t hash() const;

 private:
  explicit Term(TermKind kind) : kind_(kind), int_(0) {}

  TermKind kind_ = TermKind::Atom;
  bool ground_ = true;
  Symbol symbol_;
  union {
    std::int64_t int_;
    double float_;
    VarId var_;
  };
  std::shared_ptr<const std::vector<Term>> args_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Renumbers variables to 0..k-1 by first left-to-right occurrence,
/// sharing one numbering across the whole vector.
std::vector<Term> canonical(std::span<const Term> terms);
Term canonical(const Term& term);

/// True iff the two terms are equal up to consistent variable renaming.
bool variant(const Term& a, const Term& b);

/// Total order over ground terms: numbers (by value) < atoms (by name)
/// < compounds (by arity, then name, then arguments). An int and a float
/// of the same value compare equivalent. Throws InstantiationError when
/// either term is not ground.
std::weak_ordering compare_ground(const Term& a, const Term& b);

/// Adds `offset` to every variable id.
Term shift_vars(const Term& term, VarId offset);

/// Largest variable id plus one, or 0 for ground terms.
VarId var_bound(const Term& term);

/// Appends the variables of `term` in first-occurrence order, skipping
/// ones already present in `out`.
void collect_vars(const Term& term, std::vector<VarId>& out);

/// Prolog-style rendering. Infix operators print infix, with operator
/// subterms parenthesized; variables print as `_G<id>` unless `name_var`
/// supplies a name.
std::string to_string(const Term& term);
std::string to_string(const Term& term,
                      const std::function<std::string(VarId)>& name_var);
std::string format_number(double value);

}  // namespace modetab
