#include <algorithm>
#include <atomic>
#include <functional>

#include "modetab/error.hpp"
#include "modetab/table.hpp"

namespace modetab {

std::size_t SubgoalFrame::chain_length() const {
  std::size_t n = 0;
  for (const AnswerLeaf* l = first_; l; l = l->next) ++n;
  return n;
}

std::size_t SubgoalFrame::valid_count() const {
  std::size_t n = 0;
  for (const AnswerLeaf* l = first_; l; l = l->next) n += l->valid ? 1 : 0;
  return n;
}

AnswerLeaf& append_answer_leaf(SubgoalFrame& frame, TrieNode& leaf) {
  if (!std::holds_alternative<std::monostate>(leaf.payload())) {
    throw StructureError("answer leaf is already chained");
  }
  if (frame.is_complete()) throw StructureError("cannot add answers to a completed table");
  auto owned = std::make_unique<AnswerLeaf>();
  AnswerLeaf* l = owned.get();
  l->node = &leaf;
  l->seq = frame.next_seq_++;
  frame.leaves_.push_back(std::move(owned));
  leaf.set_payload(l);
  if (frame.last_) {
    frame.last_->next = l;
  } else {
    frame.first_ = l;
  }
  frame.last_ = l;
  ++frame.stats_.inserted;
  return *l;
}

InvalidateResult invalidate_branch(SubgoalFrame& frame, TrieNode& node) {
  if (frame.is_complete()) throw StructureError("cannot invalidate answers of a completed table");
  if (&node == &frame.answers_.root() || !frame.answers_.contains(node)) {
    throw StructureError("node is not a live node of this answer trie");
  }
  InvalidateResult res;
  std::function<void(TrieNode&)> tag = [&](TrieNode& n) {
    if (auto* leaf = std::get_if<AnswerLeaf*>(&n.payload())) {
      if ((*leaf)->valid) {
        (*leaf)->valid = false;
        ++res.leaves_invalidated;
      }
    }
    for (const auto& c : n.children()) tag(*c);
  };
  tag(node);
  res.nodes_removed = subtree_size(node);
  frame.detached_.push_back(frame.answers_.detach(node));
  frame.stats_.invalidated += res.leaves_invalidated;
  return res;
}

void complete_table(SubgoalFrame& frame) {
  if (frame.is_complete()) throw StructureError("table is already complete");
  AnswerLeaf* prev = nullptr;
  frame.first_ = nullptr;
  for (const auto& owned : frame.leaves_) {
    AnswerLeaf* l = owned.get();
    if (!l->valid) continue;
    if (prev) {
      prev->next = l;
    } else {
      frame.first_ = l;
    }
    prev = l;
  }
  if (prev) prev->next = nullptr;
  frame.last_ = prev;
  auto before = frame.leaves_.size();
  std::erase_if(frame.leaves_, [](const auto& l) { return !l->valid; });
  frame.stats_.purged += before - frame.leaves_.size();
  frame.detached_.clear();
  frame.state_ = TableState::Complete;
}

AnswerLeaf* next_valid(const SubgoalFrame& frame, const AnswerLeaf* from) {
  AnswerLeaf* l = from ? from->next : frame.first_answer();
  while (l && !l->valid) l = l->next;
  return l;
}

std::vector<AnswerLeaf*> answers_after(const SubgoalFrame& frame, const AnswerLeaf* from) {
  std::vector<AnswerLeaf*> out;
  for (AnswerLeaf* l = next_valid(frame, from); l; l = next_valid(frame, l)) out.push_back(l);
  return out;
}

TokenSeq answer_tokens(const AnswerLeaf& leaf) { return Trie::path_tokens(*leaf.node); }

std::vector<Term> answer_terms(const AnswerLeaf& leaf) { return decode(answer_tokens(leaf)); }

std::string dump_chain(const SubgoalFrame& frame) {
  std::string out;
  for (const AnswerLeaf* l = frame.first_answer(); l; l = l->next) {
    std::string tokens = to_string(answer_tokens(*l));
    out += tokens;
    if (!tokens.empty()) out += ' ';
    out += l->valid ? "[valid]\n" : "[invalid]\n";
  }
  return out;
}

TokenSeq call_tokens(const ModeArray& modes, std::span<const Term> call_args,
                     VarNumbering& vars) {
  if (call_args.size() != modes.size()) {
    throw ModeError("call arity does not match its mode array");
  }
  TokenSeq out;
  for (const ModeEntry& e : modes.entries()) tokenize_into(call_args[e.position - 1], vars, out);
  return out;
}

SubgoalLookup subgoal_lookup_insert(TableEntry& entry, std::span<const Term> call_args) {
  static std::atomic<std::uint64_t> next_frame_id{0};
  VarNumbering vars;
  TokenSeq seq = call_tokens(entry.modes_, call_args, vars);
  auto [leaf, existed] = entry.subgoals_.insert(seq);
  if (auto* frame = std::get_if<SubgoalFrame*>(&leaf->payload())) {
    return {*frame, false, vars.order()};
  }
  auto subst = build_substitution_array(entry.modes_, call_args);
  entry.frames_.push_back(
      std::make_unique<SubgoalFrame>(next_frame_id++, std::move(seq), std::move(subst)));
  SubgoalFrame* frame = entry.frames_.back().get();
  leaf->set_payload(frame);
  return {frame, true, vars.order()};
}

TableEntry& TableSpace::declare(const PredicateKey& pred, ModeArray modes) {
  auto [it, inserted] = entries_.try_emplace(pred);
  if (!inserted) throw ModeError("duplicate table declaration for " + pred.to_string());
  it->second = std::make_unique<TableEntry>(pred, std::move(modes));
  return *it->second;
}

TableEntry* TableSpace::find(const PredicateKey& pred) {
  auto it = entries_.find(pred);
  return it == entries_.end() ? nullptr : it->second.get();
}

const TableEntry* TableSpace::find(const PredicateKey& pred) const {
  auto it = entries_.find(pred);
  return it == entries_.end() ? nullptr : it->second.get();
}

}  // namespace modetab
