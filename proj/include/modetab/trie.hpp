#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "modetab/token.hpp"

namespace modetab {

class SubgoalFrame;
struct AnswerLeaf;

/// What a trie leaf points at: a subgoal frame (subgoal tries) or an
/// entry of the answer chain (answer tries).
using LeafPayload = std::variant<std::monostate, SubgoalFrame*, AnswerLeaf*>;

class TrieNode {
 public:
  TrieNode(Token token, TrieNode* parent) : token_(token), parent_(parent) {}
  TrieNode(const TrieNode&) = delete;
  TrieNode& operator=(const TrieNode&) = delete;

  const Token& token() const { return token_; }
  TrieNode* parent() const { return parent_; }
  std::size_t child_count() const { return children_.size(); }

  /// Children in insertion order.
  std::span<const std::unique_ptr<TrieNode>> children() const { return children_; }
  TrieNode* first_child() const { return children_.empty() ? nullptr : children_.front().get(); }
  TrieNode* find_child(const Token& token) const;

  const LeafPayload& payload() const { return payload_; }
  void set_payload(LeafPayload p) { payload_ = p; }

 private:
  friend class Trie;

  TrieNode* add_child(const Token& token);
  std::unique_ptr<TrieNode> remove_child(TrieNode* child);

  static constexpr std::size_t kIndexThreshold = 8;

  Token token_;
  TrieNode* parent_;
  std::vector<std::unique_ptr<TrieNode>> children_;
  // built once a node fans out past kIndexThreshold children
  std::unique_ptr<std::unordered_map<Token, TrieNode*, TokenHash>> index_;
  LeafPayload payload_;
};

/// A token trie. Every distinct root-down path spells one inserted
/// sequence; sequences sharing a prefix share the prefix nodes.
class Trie {
 public:
  struct InsertResult {
    TrieNode* leaf;
    bool existed;
  };

  Trie() : root_(Token::atom(Symbol()), nullptr) {}

  TrieNode& root() { return root_; }
  const TrieNode& root() const { return root_; }

  /// Walks `seq` from `from`, creating missing nodes.
  InsertResult insert(TrieNode& from, std::span<const Token> seq);
  InsertResult insert(std::span<const Token> seq) { return insert(root_, seq); }

  /// Root-down lookup; nullptr if the full path is absent.
  TrieNode* lookup(std::span<const Token> seq) const;

  /// Unlinks `node` (and its subtree) from its parent. The subtree keeps
  /// its internal parent links, so leaves can still be decoded bottom-up.
  std::unique_ptr<TrieNode> detach(TrieNode& node);

  /// True iff `node` is reachable from the root.
  bool contains(const TrieNode& node) const;

  /// Number of live nodes, root excluded.
  std::size_t node_count() const { return node_count_; }

  /// Tokens on the path from just below `stop` (default: the root) down
  /// to `node`.
  static TokenSeq path_tokens(const TrieNode& node, const TrieNode* stop = nullptr);

 private:
  TrieNode root_;
  std::size_t node_count_ = 0;
};

/// Number of nodes in the subtree rooted at `node`, inclusive.
std::size_t subtree_size(const TrieNode& node);

}  // namespace modetab
