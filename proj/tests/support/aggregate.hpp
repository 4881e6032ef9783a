#pragma once

#include <map>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "modetab/answer_insert.hpp"
#include "modetab/table.hpp"

namespace testsupport {

using namespace modetab;

bool term_vec_less(const std::vector<Term>& a, const std::vector<Term>& b);

using AnswerSet = std::set<std::vector<Term>, bool (*)(const std::vector<Term>&, const std::vector<Term>&)>;

inline AnswerSet make_answer_set() { return AnswerSet(term_vec_less); }

/// An answer table for p(K, V) or p(K, V, A) with every argument free,
/// so substitution terms follow the mode array order.
struct FrameFixture {
  std::unique_ptr<TableEntry> entry;
  SubgoalFrame* frame = nullptr;

  explicit FrameFixture(const std::vector<Mode>& modes) {
    PredicateKey pred{Symbol("p"), static_cast<std::uint32_t>(modes.size())};
    entry = std::make_unique<TableEntry>(pred, ModeArray::compile(pred, modes));
    std::vector<Term> args;
    for (std::size_t i = 0; i < modes.size(); ++i) args.push_back(Term::var(i));
    frame = subgoal_lookup_insert(*entry, args).frame;
  }

  /// Answer terms in source argument order.
  InsertOutcome insert(const std::vector<Term>& source_args) {
    std::vector<Term> ordered;
    for (const ModeEntry& e : entry->mode_array().entries()) {
      ordered.push_back(source_args[e.position - 1]);
    }
    return insert_answer(*frame, ordered);
  }

  /// Valid answers in source argument order.
  AnswerSet valid() const;
};

/// Straight-line reference: folds a flat candidate list per key.
/// Candidates are (K, V) or (K, V, A) integer triples.
AnswerSet reference_aggregate(const std::vector<Mode>& modes,
                              const std::vector<std::vector<std::int64_t>>& candidates);

}  // namespace testsupport
