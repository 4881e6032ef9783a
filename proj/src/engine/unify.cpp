#include "modetab/unify.hpp"

namespace modetab {

const Term& deref(const Term& t, const Bindings& b) {
  const Term* cur = &t;
  while (cur->is_var()) {
    const Term* next = b.lookup(cur->var_id());
    if (!next) break;
    cur = next;
  }
  return *cur;
}

bool unify(const Term& x, const Term& y, Bindings& b) {
  const Term& a = deref(x, b);
  const Term& c = deref(y, b);
  if (a.is_var()) {
    if (!(c.is_var() && c.var_id() == a.var_id())) b.bind(a.var_id(), c);
    return true;
  }
  if (c.is_var()) {
    b.bind(c.var_id(), a);
    return true;
  }
  if (a.kind() != c.kind()) return false;
  if (!a.is_compound()) return a == c;
  if (a.symbol() != c.symbol() || a.arity() != c.arity()) return false;
  if (a.is_ground() && c.is_ground()) return a == c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!unify(a.arg(i), c.arg(i), b)) return false;
  }
  return true;
}

Term resolve(const Term& t, const Bindings& b) {
  if (t.is_ground() || b.empty()) return t;
  if (t.is_var()) {
    const Term& d = deref(t, b);
    return d.is_var() ? d : resolve(d, b);
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(resolve(a, b));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::compound(t.symbol(), std::move(args)) : t;
}

bool match(const Term& pattern, const Term& instance, Bindings& b) {
  if (pattern.is_var()) {
    if (const Term* bound = b.lookup(pattern.var_id())) return *bound == instance;
    b.bind(pattern.var_id(), instance);
    return true;
  }
  if (pattern.kind() != instance.kind()) return false;
  if (!pattern.is_compound()) return pattern == instance;
  if (pattern.symbol() != instance.symbol() || pattern.arity() != instance.arity()) return false;
  if (pattern.is_ground()) return pattern == instance;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match(pattern.arg(i), instance.arg(i), b)) return false;
  }
  return true;
}

}  // namespace modetab
