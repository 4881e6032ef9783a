#include "modetab/answer_insert.hpp"

#include <vector>

#include "modetab/error.hpp"

namespace modetab {

std::string to_string(InsertOutcome::Kind kind) {
  switch (kind) {
    case InsertOutcome::Kind::New: return "new";
    case InsertOutcome::Kind::Replaced: return "replaced";
    case InsertOutcome::Kind::Added: return "added";
    case InsertOutcome::Kind::Rejected: return "rejected";
    case InsertOutcome::Kind::SumUpdated: return "sum_updated";
  }
  return "?";
}

namespace {

using Kind = InsertOutcome::Kind;

std::string where(const std::string& pred) { return pred.empty() ? "" : " in " + pred; }

Term add_numbers(const Term& a, const Term& b, const std::string& pred) {
  if (a.is_int() && b.is_int()) {
    std::int64_t r;
    if (__builtin_add_overflow(a.as_int(), b.as_int(), &r)) {
      throw EvaluationError("integer overflow in sum aggregation" + where(pred));
    }
    return Term::integer(r);
  }
  double x = a.is_int() ? static_cast<double>(a.as_int()) : a.as_float();
  double y = b.is_int() ? static_cast<double>(b.as_int()) : b.as_float();
  return Term::floating(x + y);
}

/// Follows the single stored term starting below `node`; returns the
/// node holding its last token.
TrieNode* stored_term(TrieNode* node, TokenSeq& tokens) {
  tokens.clear();
  std::size_t pending = 1;
  while (pending > 0) {
    node = node->first_child();
    if (!node) throw StructureError("answer trie ends inside a stored term");
    tokens.push_back(node->token());
    consume_token(node->token(), pending);
  }
  return node;
}

class Inserter {
 public:
  Inserter(SubgoalFrame& frame, const std::string& pred)
      : frame_(frame), trie_(frame.answers()), node_(&trie_.root()), pred_(pred) {}

  InsertOutcome run(std::span<const Term> terms) {
    SubstitutionArray segments = compact(frame_.substitution_array());
    if (terms.size() != total_vars(segments)) {
      throw StructureError("answer has " + std::to_string(terms.size()) +
                           " substitution terms, expected " +
                           std::to_string(total_vars(segments)));
    }
    check_values(segments, terms);

    std::size_t t = 0;
    for (const SubstEntry& seg : segments) {
      auto seg_terms = terms.subspan(t, seg.var_count);
      t += seg.var_count;
      switch (seg.mode) {
        case Mode::Index:
        case Mode::All:
          for (const Term& term : seg_terms) walk(term, seg.mode);
          break;
        case Mode::Min:
        case Mode::Max:
          for (const Term& term : seg_terms) {
            if (!compare_step(seg.mode, term)) return rejected();
          }
          break;
        case Mode::Sum:
          sum_step(seg_terms.front());
          break;
        case Mode::Last:
          last_step(seg_terms);
          break;
        case Mode::First:
          if (!fresh_ && node_->child_count() > 0) return rejected();
          for (const Term& term : seg_terms) walk(term, seg.mode);
          break;
      }
    }

    if (std::holds_alternative<AnswerLeaf*>(node_->payload())) return rejected();
    InsertOutcome out;
    out.kind = decided_ ? kind_ : Kind::New;
    out.invalidated = invalidated_;
    out.total = total_;
    out.leaf = &append_answer_leaf(frame_, *node_);
    return out;
  }

 private:
  void check_values(const SubstitutionArray& segments, std::span<const Term> terms) const {
    std::size_t t = 0;
    for (const SubstEntry& seg : segments) {
      for (std::uint32_t i = 0; i < seg.var_count; ++i, ++t) {
        const Term& v = terms[t];
        if (seg.mode == Mode::Min || seg.mode == Mode::Max || seg.mode == Mode::Sum) {
          if (!v.is_ground()) {
            throw InstantiationError("non-ground value for " + std::string(mode_name(seg.mode)) +
                                     " argument" + where(pred_));
          }
        }
        if (seg.mode == Mode::Sum && !v.is_number()) {
          throw TypeError("sum argument is not a number" + where(pred_) + ": " + to_string(v));
        }
      }
      if (seg.mode == Mode::Sum && seg.var_count > 1) {
        throw ModeError("sum argument binds more than one variable" + where(pred_));
      }
    }
  }

  void decide(Kind k) {
    if (!decided_) {
      decided_ = true;
      kind_ = k;
    }
  }

  void walk(const Term& term, Mode mode) {
    scratch_.clear();
    tokenize_into(term, vars_, scratch_);
    for (const Token& tok : scratch_) {
      if (!fresh_) {
        if (TrieNode* child = node_->find_child(tok)) {
          node_ = child;
          continue;
        }
        fresh_ = true;
        decide(mode == Mode::All && node_->child_count() > 0 ? Kind::Added : Kind::New);
      }
      node_ = trie_.insert(*node_, std::span<const Token>(&tok, 1)).leaf;
    }
  }

  void invalidate_children() {
    while (node_->child_count() > 0) {
      invalidated_ += invalidate_branch(frame_, *node_->first_child()).leaves_invalidated;
    }
  }

  // false when the candidate loses
  bool compare_step(Mode mode, const Term& candidate) {
    if (fresh_ || node_->child_count() == 0) {
      walk(candidate, mode);
      return true;
    }
    TokenSeq stored_tokens;
    TrieNode* end = stored_term(node_, stored_tokens);
    Term stored = decode(stored_tokens).front();
    switch (preferable(mode, stored, candidate)) {
      case Preference::KeepOld:
        return false;
      case Preference::Tie:
        node_ = end;
        return true;
      case Preference::Replace:
        invalidate_children();
        decide(Kind::Replaced);
        fresh_ = true;
        walk(candidate, mode);
        return true;
    }
    return true;
  }

  void sum_step(const Term& candidate) {
    if (fresh_ || node_->child_count() == 0) {
      walk(candidate, Mode::Sum);
      return;
    }
    TokenSeq stored_tokens;
    stored_term(node_, stored_tokens);
    Term total = add_numbers(decode(stored_tokens).front(), candidate, pred_);
    invalidate_children();
    decide(Kind::SumUpdated);
    total_ = total;
    fresh_ = true;
    walk(total, Mode::Sum);
  }

  void last_step(std::span<const Term> candidate) {
    if (fresh_ || node_->child_count() == 0) {
      for (const Term& term : candidate) walk(term, Mode::Last);
      return;
    }
    VarNumbering probe_vars = vars_;
    TokenSeq probe;
    for (const Term& term : candidate) tokenize_into(term, probe_vars, probe);
    TrieNode* n = node_;
    for (const Token& tok : probe) {
      n = n->find_child(tok);
      if (!n) break;
    }
    if (n) {
      // identical value: a duplicate, not a replacement
      for (const Term& term : candidate) walk(term, Mode::Last);
      return;
    }
    invalidate_children();
    decide(Kind::Replaced);
    fresh_ = true;
    for (const Term& term : candidate) walk(term, Mode::Last);
  }

  InsertOutcome rejected() const {
    InsertOutcome out;
    out.kind = Kind::Rejected;
    return out;
  }

  SubgoalFrame& frame_;
  Trie& trie_;
  TrieNode* node_;
  const std::string& pred_;
  VarNumbering vars_;
  TokenSeq scratch_;
  bool fresh_ = false;
  bool decided_ = false;
  Kind kind_ = Kind::New;
  std::size_t invalidated_ = 0;
  std::optional<Term> total_;
};

}  // namespace

InsertOutcome insert_answer(SubgoalFrame& frame, std::span<const Term> subst_terms,
                            const std::string& pred) {
  if (frame.is_complete()) {
    throw StructureError("cannot insert answers into a completed table");
  }
  return Inserter(frame, pred).run(subst_terms);
}

}  // namespace modetab
