#include "modetab/term.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <unordered_map>

#include "modetab/error.hpp"

namespace modetab {

Term::Term() : kind_(TermKind::Atom), int_(0) {
  static const Symbol nil("[]");
  symbol_ = nil;
}

Term Term::integer(std::int64_t value) {
  Term t(TermKind::Int);
  t.int_ = value;
  return t;
}

Term Term::floating(double value) {
  Term t(TermKind::Float);
  t.float_ = value;
  return t;
}

Term Term::atom(Symbol name) {
  Term t(TermKind::Atom);
  t.symbol_ = name;
  return t;
}

Term Term::var(VarId id) {
  Term t(TermKind::Var);
  t.var_ = id;
  t.ground_ = false;
  return t;
}

Term Term::compound(Symbol functor, std::vector<Term> args) {
  if (args.empty()) return atom(functor);
  Term t(TermKind::Struct);
  t.symbol_ = functor;
  t.ground_ = std::all_of(args.begin(), args.end(),
                          [](const Term& a) { return a.is_ground(); });
  t.args_ = std::make_shared<const std::vector<Term>>(std::move(args));
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case TermKind::Int:
      return a.int_ == b.int_;
    case TermKind::Float: {
      // bitwise, so that 0.0 and -0.0 stay distinct like their tokens
      return std::memcmp(&a.float_, &b.float_, sizeof(double)) == 0;
    }
    case TermKind::Atom:
      return a.symbol_ == b.symbol_;
    case TermKind::Var:
      return a.var_ == b.var_;
    case TermKind::Struct:
      if (a.symbol_ != b.symbol_ || a.arity() != b.arity()) return false;
      if (a.args_ == b.args_) return true;
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!(a.arg(i) == b.arg(i))) return false;
      }
      return true;
  }
  return false;
}

std::size_t Term::hash() const {
  auto mix = [](std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::size_t h = static_cast<std::size_t>(kind_);
  switch (kind_) {
    case TermKind::Int:
      return mix(h, std::hash<std::int64_t>{}(int_));
    case TermKind::Float: {
      std::uint64_t bits;
      std::memcpy(&bits, &float_, sizeof bits);
      return mix(h, std::hash<std::uint64_t>{}(bits));
    }
    case TermKind::Atom:
      return mix(h, symbol_.id());
    case TermKind::Var:
      return mix(h, std::hash<VarId>{}(var_));
    case TermKind::Struct:
      h = mix(h, symbol_.id());
      for (const Term& a : args()) h = mix(h, a.hash());
      return h;
  }
  return h;
}

namespace {

Term renumber(const Term& t, std::unordered_map<VarId, VarId>& map) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto [it, inserted] = map.try_emplace(t.var_id(), map.size());
      return Term::var(it->second);
    }
    case TermKind::Struct: {
      if (t.is_ground()) return t;
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const Term& a : t.args()) args.push_back(renumber(a, map));
      return Term::compound(t.symbol(), std::move(args));
    }
    default:
      return t;
  }
}

int kind_rank(const Term& t) {
  switch (t.kind()) {
    case TermKind::Int:
    case TermKind::Float:
      return 0;
    case TermKind::Atom:
      return 1;
    case TermKind::Struct:
      return 2;
    case TermKind::Var:
      break;
  }
  throw InstantiationError("min/max argument is not ground");
}

std::weak_ordering compare_numbers(const Term& a, const Term& b) {
  if (a.is_int() && b.is_int()) return a.as_int() <=> b.as_int();
  long double x = a.is_int() ? static_cast<long double>(a.as_int())
                             : static_cast<long double>(a.as_float());
  long double y = b.is_int() ? static_cast<long double>(b.as_int())
                             : static_cast<long double>(b.as_float());
  if (x < y) return std::weak_ordering::less;
  if (x > y) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace

std::vector<Term> canonical(std::span<const Term> terms) {
  std::unordered_map<VarId, VarId> map;
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) out.push_back(renumber(t, map));
  return out;
}

Term canonical(const Term& term) {
  std::unordered_map<VarId, VarId> map;
  return renumber(term, map);
}

bool variant(const Term& a, const Term& b) {
  return canonical(a) == canonical(b);
}

std::weak_ordering compare_ground(const Term& a, const Term& b) {
  int ra = kind_rank(a);
  int rb = kind_rank(b);
  if (ra != rb) return ra <=> rb;
  switch (ra) {
    case 0:
      return compare_numbers(a, b);
    case 1:
      return a.symbol().name() <=> b.symbol().name();
    default:
      break;
  }
  if (a.arity() != b.arity()) return a.arity() <=> b.arity();
  if (a.symbol() != b.symbol()) return a.symbol().name() <=> b.symbol().name();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto c = compare_ground(a.arg(i), b.arg(i));
    if (c != 0) return c;
  }
  return std::weak_ordering::equivalent;
}

Term shift_vars(const Term& term, VarId offset) {
  switch (term.kind()) {
    case TermKind::Var:
      return Term::var(term.var_id() + offset);
    case TermKind::Struct: {
      if (term.is_ground()) return term;
      std::vector<Term> args;
      args.reserve(term.arity());
      for (const Term& a : term.args()) args.push_back(shift_vars(a, offset));
      return Term::compound(term.symbol(), std::move(args));
    }
    default:
      return term;
  }
}

VarId var_bound(const Term& term) {
  if (term.is_var()) return term.var_id() + 1;
  VarId best = 0;
  if (term.is_compound() && !term.is_ground()) {
    for (const Term& a : term.args()) best = std::max(best, var_bound(a));
  }
  return best;
}

void collect_vars(const Term& term, std::vector<VarId>& out) {
  if (term.is_var()) {
    if (std::find(out.begin(), out.end(), term.var_id()) == out.end()) {
      out.push_back(term.var_id());
    }
  } else if (term.is_compound() && !term.is_ground()) {
    for (const Term& a : term.args()) collect_vars(a, out);
  }
}

std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace {

bool is_infix_op(const Term& t) {
  if (!t.is_compound() || t.arity() != 2) return false;
  static const char* ops[] = {":-", ",",   "is", "=",  "<",  ">",  "=<",
                              ">=", "=:=", "=\\=", "+", "-",  "*",  "/"};
  const std::string& n = t.symbol().name();
  return std::any_of(std::begin(ops), std::end(ops),
                     [&](const char* op) { return n == op; });
}

bool plain_atom(const std::string& n) {
  if (n == "[]") return true;
  if (n.empty() || !(n[0] >= 'a' && n[0] <= 'z')) return false;
  return std::all_of(n.begin(), n.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

void write_atom(std::string& out, const std::string& n) {
  if (plain_atom(n)) {
    out += n;
    return;
  }
  out += '\'';
  for (char c : n) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
}

void write(std::string& out, const Term& t,
           const std::function<std::string(VarId)>& name_var) {
  switch (t.kind()) {
    case TermKind::Int:
      out += std::to_string(t.as_int());
      return;
    case TermKind::Float:
      out += format_number(t.as_float());
      return;
    case TermKind::Atom:
      write_atom(out, t.symbol().name());
      return;
    case TermKind::Var:
      out += name_var ? name_var(t.var_id()) : "_G" + std::to_string(t.var_id());
      return;
    case TermKind::Struct:
      break;
  }
  if (is_infix_op(t)) {
    for (int i = 0; i < 2; ++i) {
      const Term& a = t.arg(i);
      bool paren = is_infix_op(a);
      if (paren) out += '(';
      write(out, a, name_var);
      if (paren) out += ')';
      if (i == 0) {
        const std::string& n = t.symbol().name();
        if (n == ",") {
          out += ", ";
        } else {
          out += ' ';
          out += n;
          out += ' ';
        }
      }
    }
    return;
  }
  write_atom(out, t.symbol().name());
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    const Term& a = t.arg(i);
    // a bare comma term would read back as two arguments
    bool paren = a.is_compound() && a.arity() == 2 && a.symbol().name() == ",";
    if (paren) out += '(';
    write(out, a, name_var);
    if (paren) out += ')';
  }
  out += ')';
}

}  // namespace

std::string to_string(const Term& term) { return to_string(term, nullptr); }

std::string to_string(const Term& term,
                      const std::function<std::string(VarId)>& name_var) {
  std::string out;
  write(out, term, name_var);
  return out;
}

}  // namespace modetab
