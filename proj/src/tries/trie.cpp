#include "modetab/trie.hpp"

#include <algorithm>

#include "modetab/error.hpp"

namespace modetab {

TrieNode* TrieNode::find_child(const Token& token) const {
  if (index_) {
    auto it = index_->find(token);
    return it == index_->end() ? nullptr : it->second;
  }
  for (const auto& c : children_) {
    if (c->token_ == token) return c.get();
  }
  return nullptr;
}

TrieNode* TrieNode::add_child(const Token& token) {
  children_.push_back(std::make_unique<TrieNode>(token, this));
  TrieNode* child = children_.back().get();
  if (index_) {
    index_->emplace(token, child);
  } else if (children_.size() > kIndexThreshold) {
    index_ = std::make_unique<std::unordered_map<Token, TrieNode*, TokenHash>>();
    for (const auto& c : children_) index_->emplace(c->token_, c.get());
  }
  return child;
}

std::unique_ptr<TrieNode> TrieNode::remove_child(TrieNode* child) {
  auto it = std::find_if(children_.begin(), children_.end(),
                         [&](const auto& c) { return c.get() == child; });
  if (it == children_.end()) throw StructureError("node is not a child of its parent");
  std::unique_ptr<TrieNode> owned = std::move(*it);
  children_.erase(it);
  if (index_) index_->erase(owned->token_);
  return owned;
}

Trie::InsertResult Trie::insert(TrieNode& from, std::span<const Token> seq) {
  TrieNode* node = &from;
  bool existed = true;
  for (const Token& t : seq) {
    TrieNode* next = existed ? node->find_child(t) : nullptr;
    if (!next) {
      next = node->add_child(t);
      ++node_count_;
      existed = false;
    }
    node = next;
  }
  return {node, existed};
}

TrieNode* Trie::lookup(std::span<const Token> seq) const {
  const TrieNode* node = &root_;
  for (const Token& t : seq) {
    node = node->find_child(t);
    if (!node) return nullptr;
  }
  return const_cast<TrieNode*>(node);
}

std::unique_ptr<TrieNode> Trie::detach(TrieNode& node) {
  if (&node == &root_) throw StructureError("cannot detach the trie root");
  if (!contains(node)) throw StructureError("node is not part of this trie");
  node_count_ -= subtree_size(node);
  return node.parent_->remove_child(&node);
}

bool Trie::contains(const TrieNode& node) const {
  const TrieNode* n = &node;
  while (n->parent_) {
    if (n->parent_->find_child(n->token_) != n) return false;
    n = n->parent_;
  }
  return n == &root_;
}

TokenSeq Trie::path_tokens(const TrieNode& node, const TrieNode* stop) {
  TokenSeq out;
  const TrieNode* n = &node;
  while (n != stop && n->parent()) {
    out.push_back(n->token());
    n = n->parent();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t subtree_size(const TrieNode& node) {
  std::size_t n = 1;
  for (const auto& c : node.children()) n += subtree_size(*c);
  return n;
}

}  // namespace modetab
