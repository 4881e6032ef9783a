#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "modetab/modes.hpp"
#include "modetab/trie.hpp"

namespace modetab {

/// One answer in a subgoal frame's insertion-ordered chain. Invalidated
/// leaves stay chained until the table completes, so consumers parked on
/// them can keep following `next`.
struct AnswerLeaf {
  TrieNode* node = nullptr;
  AnswerLeaf* next = nullptr;
  bool valid = true;
  std::uint64_t seq = 0;  // position in insertion order, never reused
};

struct InvalidateResult {
  std::size_t nodes_removed = 0;       // nodes unlinked from the live trie
  std::size_t leaves_invalidated = 0;  // answers tagged invalid
};

class SubgoalFrame;

struct SubgoalLookup {
  SubgoalFrame* frame;
  bool is_new;
  /// Free variables of the call in subgoal-trie insertion order; answer
  /// substitution term i binds variable i.
  std::vector<VarId> call_vars;
};

enum class TableState { Incomplete, Complete };

struct FrameStats {
  std::uint64_t inserted = 0;
  std::uint64_t invalidated = 0;
  std::uint64_t purged = 0;
};

class SubgoalFrame {
 public:
  SubgoalFrame(std::uint64_t id, TokenSeq call_tokens, SubstitutionArray subst)
      : id_(id), call_tokens_(std::move(call_tokens)), subst_(std::move(subst)) {}
  SubgoalFrame(const SubgoalFrame&) = delete;
  SubgoalFrame& operator=(const SubgoalFrame&) = delete;

  std::uint64_t id() const { return id_; }
  const TokenSeq& call_tokens() const { return call_tokens_; }
  const SubstitutionArray& substitution_array() const { return subst_; }

  Trie& answers() { return answers_; }
  const Trie& answers() const { return answers_; }

  AnswerLeaf* first_answer() const { return first_; }
  AnswerLeaf* last_answer() const { return last_; }

  TableState state() const { return state_; }
  bool is_complete() const { return state_ == TableState::Complete; }

  FrameStats& stats() { return stats_; }
  const FrameStats& stats() const { return stats_; }

  std::size_t chain_length() const;
  std::size_t valid_count() const;

 private:
  friend AnswerLeaf& append_answer_leaf(SubgoalFrame&, TrieNode&);
  friend InvalidateResult invalidate_branch(SubgoalFrame&, TrieNode&);
  friend void complete_table(SubgoalFrame&);

  std::uint64_t id_;
  TokenSeq call_tokens_;
  SubstitutionArray subst_;
  Trie answers_;
  std::vector<std::unique_ptr<AnswerLeaf>> leaves_;
  // invalidated subtrees, unreachable from the root but still decodable
  std::vector<std::unique_ptr<TrieNode>> detached_;
  AnswerLeaf* first_ = nullptr;
  AnswerLeaf* last_ = nullptr;
  TableState state_ = TableState::Incomplete;
  FrameStats stats_;
  std::uint64_t next_seq_ = 0;
};

/// Appends `leaf` at the chain tail. Throws StructureError if the node
/// already carries an answer.
AnswerLeaf& append_answer_leaf(SubgoalFrame& frame, TrieNode& leaf);

/// Tags every answer at or below `node` invalid and unlinks `node`'s
/// subtree from the answer trie. The leaves stay in the chain.
InvalidateResult invalidate_branch(SubgoalFrame& frame, TrieNode& node);

/// Unlinks and frees invalid leaves, then marks the frame complete.
void complete_table(SubgoalFrame& frame);

/// First valid leaf after `from` (or from the head when null). Walks
/// through invalid leaves.
AnswerLeaf* next_valid(const SubgoalFrame& frame, const AnswerLeaf* from);

/// Valid leaves after `from`, in chain order.
std::vector<AnswerLeaf*> answers_after(const SubgoalFrame& frame, const AnswerLeaf* from);

/// Substitution terms of an answer, decoded bottom-up from its leaf.
std::vector<Term> answer_terms(const AnswerLeaf& leaf);
TokenSeq answer_tokens(const AnswerLeaf& leaf);

/// One line per chained answer: `tokens... [valid|invalid]`.
std::string dump_chain(const SubgoalFrame& frame);

/// A tabled predicate: its mode array and subgoal trie.
class TableEntry {
 public:
  TableEntry(PredicateKey pred, ModeArray modes)
      : pred_(pred), modes_(std::move(modes)) {}
  TableEntry(const TableEntry&) = delete;
  TableEntry& operator=(const TableEntry&) = delete;

  const PredicateKey& predicate() const { return pred_; }
  const ModeArray& mode_array() const { return modes_; }
  Trie& subgoals() { return subgoals_; }
  const Trie& subgoals() const { return subgoals_; }
  std::span<const std::unique_ptr<SubgoalFrame>> frames() const { return frames_; }

 private:
  friend SubgoalLookup subgoal_lookup_insert(TableEntry&, std::span<const Term>);

  PredicateKey pred_;
  ModeArray modes_;
  Trie subgoals_;
  std::vector<std::unique_ptr<SubgoalFrame>> frames_;
};

/// Inserts the call's arguments in mode-array order and returns the
/// frame for its variant class.
SubgoalLookup subgoal_lookup_insert(TableEntry& entry, std::span<const Term> call_args);

/// Token sequence of a call in mode-array order.
TokenSeq call_tokens(const ModeArray& modes, std::span<const Term> call_args,
                     VarNumbering& vars);

/// All tables of one evaluation.
class TableSpace {
 public:
  TableEntry& declare(const PredicateKey& pred, ModeArray modes);
  TableEntry* find(const PredicateKey& pred);
  const TableEntry* find(const PredicateKey& pred) const;
  /// Drops every table entry and its answers.
  void abolish() { entries_.clear(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<PredicateKey, std::unique_ptr<TableEntry>, PredicateKeyHash> entries_;
};

}  // namespace modetab
