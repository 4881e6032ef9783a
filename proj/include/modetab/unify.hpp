#pragma once

#include <utility>
#include <vector>

#include "modetab/term.hpp"

namespace modetab {

/// Triangular variable bindings. Small and flat: a clause head rarely
/// binds more than a handful of variables.
class Bindings {
 public:
  const Term* lookup(VarId v) const {
    for (const auto& [var, term] : b_) {
      if (var == v) return &term;
    }
    return nullptr;
  }
  void bind(VarId v, Term t) { b_.emplace_back(v, std::move(t)); }
  std::size_t size() const { return b_.size(); }
  bool empty() const { return b_.empty(); }
  void clear() { b_.clear(); }
  void truncate(std::size_t n) { b_.resize(n); }

 private:
  std::vector<std::pair<VarId, Term>> b_;
};

/// Follows variable bindings at the top of `t`.
const Term& deref(const Term& t, const Bindings& b);

/// Syntactic unification without occurs check. On failure `b` may hold
/// partial bindings; callers truncate back.
bool unify(const Term& x, const Term& y, Bindings& b);

/// `t` with every bound variable replaced, recursively.
Term resolve(const Term& t, const Bindings& b);

/// One-way matching: binds variables of `pattern` only, so that
/// resolve(pattern) == instance.
bool match(const Term& pattern, const Term& instance, Bindings& b);

}  // namespace modetab
