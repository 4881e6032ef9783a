#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modetab/modes.hpp"
#include "modetab/strategy.hpp"
#include "modetab/term.hpp"

namespace modetab {

/// A clause with its variables numbered 0..var_count-1 by first
/// occurrence (head first).
struct Clause {
  Term head;
  std::vector<Term> body;
  std::uint32_t var_count = 0;
  std::vector<std::string> var_names;  // "_" for anonymous variables
  std::size_t line = 0;

  PredicateKey predicate() const;
};

/// `:- table p(m1,...,mn).` or, without modes, `:- table p/n.`
struct TableDecl {
  PredicateKey pred;
  std::optional<std::vector<Mode>> modes;
  std::size_t line = 0;

  bool traditional() const { return !modes.has_value(); }
  ModeArray mode_array() const;
};

struct StrategyOverride {
  PredicateKey pred;
  Strategy strategy;
  std::size_t line = 0;
};

class Program {
 public:
  std::vector<TableDecl> tables;
  std::vector<StrategyOverride> strategy_overrides;
  std::vector<Clause> clauses;  // source order

  const TableDecl* table_decl(const PredicateKey& pred) const;
  std::optional<Strategy> strategy_for(const PredicateKey& pred) const;
  bool is_tabled(const PredicateKey& pred) const { return table_decl(pred) != nullptr; }
  bool defines(const PredicateKey& pred) const;
};

struct Query {
  std::vector<Term> goals;
  /// Named query variables in order of first occurrence.
  std::vector<std::pair<std::string, VarId>> vars;
  std::uint32_t var_count = 0;
};

/// Parses program text. Throws SyntaxError (with line and column) on bad
/// syntax, a malformed or duplicate table declaration, or an unknown
/// directive.
Program parse_program(std::string_view text);

/// Parses a conjunction of goals, with or without a trailing period.
Query parse_query(std::string_view text);

/// Source text that parses back to an identical Program.
std::string print_program(const Program& program);
std::string print_clause(const Clause& clause);

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string message;
  std::size_t line = 0;

  bool is_error() const { return severity == Severity::Error; }
};

std::vector<Diagnostic> validate(const Program& program);

}  // namespace modetab
