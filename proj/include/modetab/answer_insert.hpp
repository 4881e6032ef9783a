#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "modetab/table.hpp"

namespace modetab {

struct InsertOutcome {
  enum class Kind { New, Replaced, Added, Rejected, SumUpdated };

  Kind kind = Kind::Rejected;
  std::size_t invalidated = 0;     // answers invalidated by this insertion
  std::optional<Term> total;       // SumUpdated: the new aggregate
  AnswerLeaf* leaf = nullptr;      // the stored answer, unless Rejected

  bool changed_table() const { return kind != Kind::Rejected; }
};

std::string to_string(InsertOutcome::Kind kind);

/// Mode-directed answer insertion. `subst_terms` holds the bindings of
/// the call's free variables in substitution-array order. The answer
/// trie is walked one argument segment at a time:
///   index/all   variant insertion (a new all value is Added)
///   min/max     worse is Rejected, a tie descends, better invalidates
///               the stored subtree and replaces it
///   sum         the stored total is replaced by total + candidate
///   last        the stored value is replaced (an identical value is a
///               duplicate)
///   first       any stored value rejects the candidate
/// A full duplicate of a stored answer is Rejected and leaves the table
/// untouched. `pred` only labels error messages.
InsertOutcome insert_answer(SubgoalFrame& frame, std::span<const Term> subst_terms,
                            const std::string& pred = "");

}  // namespace modetab
