#include <algorithm>
#include <unordered_map>

#include "lexer.hpp"
#include "modetab/error.hpp"
#include "modetab/program.hpp"

namespace modetab {

PredicateKey Clause::predicate() const {
  return {head.symbol(), static_cast<std::uint32_t>(head.arity())};
}

ModeArray TableDecl::mode_array() const {
  if (!modes) return ModeArray::traditional(pred.arity);
  return ModeArray::compile(pred, *modes);
}

const TableDecl* Program::table_decl(const PredicateKey& pred) const {
  for (const auto& d : tables) {
    if (d.pred == pred) return &d;
  }
  return nullptr;
}

std::optional<Strategy> Program::strategy_for(const PredicateKey& pred) const {
  for (const auto& o : strategy_overrides) {
    if (o.pred == pred) return o.strategy;
  }
  return std::nullopt;
}

bool Program::defines(const PredicateKey& pred) const {
  return std::any_of(clauses.begin(), clauses.end(),
                     [&](const Clause& c) { return c.predicate() == pred; });
}

namespace {

using lang::LexKind;
using lang::LexToken;

enum class OpType { XFX, XFY, YFX };

struct InfixOp {
  int priority;
  OpType type;
};

const InfixOp* infix_op(const std::string& name) {
  static const std::unordered_map<std::string, InfixOp> ops = {
      {":-", {1200, OpType::XFX}}, {",", {1000, OpType::XFY}},  {"=", {700, OpType::XFX}},
      {"is", {700, OpType::XFX}},  {"<", {700, OpType::XFX}},   {">", {700, OpType::XFX}},
      {"=<", {700, OpType::XFX}},  {">=", {700, OpType::XFX}},  {"=:=", {700, OpType::XFX}},
      {"=\\=", {700, OpType::XFX}}, {"+", {500, OpType::YFX}},  {"-", {500, OpType::YFX}},
      {"*", {400, OpType::YFX}},   {"/", {400, OpType::YFX}},
  };
  auto it = ops.find(name);
  return it == ops.end() ? nullptr : &it->second;
}

int prefix_op(const std::string& name) {
  if (name == ":-") return 1200;
  if (name == "table" || name == "table_strategy") return 1150;
  if (name == "-") return 200;
  return 0;
}

/// Numbers variables of one clause or query by first occurrence.
struct VarScope {
  std::unordered_map<std::string, VarId> named;
  std::vector<std::string> names;

  Term get(const std::string& name) {
    if (name == "_") {
      names.push_back("_");
      return Term::var(names.size() - 1);
    }
    auto [it, inserted] = named.try_emplace(name, names.size());
    if (inserted) names.push_back(name);
    return Term::var(it->second);
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lang::lex(text)) {}

  Program program() {
    Program prog;
    while (peek().kind != LexKind::Eof) {
      scope_ = VarScope();
      const LexToken& start = peek();
      Term t = parse(1200);
      expect_end();
      if (t.is_compound() && t.arity() == 1 && t.symbol().name() == ":-") {
        directive(prog, t.arg(0), start);
      } else {
        prog.clauses.push_back(make_clause(t, start));
      }
    }
    return prog;
  }

  Query query() {
    scope_ = VarScope();
    if (peek().kind == LexKind::Eof) fail(peek(), "empty query");
    const LexToken& start = peek();
    Term t = parse(1200);
    if (peek().kind == LexKind::End) next();
    if (peek().kind != LexKind::Eof) fail(peek(), "unexpected text after query");
    Query q;
    flatten_conj(t, q.goals);
    for (const Term& g : q.goals) check_goal(g, start);
    for (std::size_t i = 0; i < scope_.names.size(); ++i) {
      if (scope_.names[i] != "_" && scope_.names[i][0] != '_') {
        q.vars.emplace_back(scope_.names[i], i);
      }
    }
    q.var_count = static_cast<std::uint32_t>(scope_.names.size());
    return q;
  }

 private:
  const LexToken& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const LexToken& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] static void fail(const LexToken& at, const std::string& msg) {
    throw SyntaxError(msg, at.line, at.column);
  }

  void expect_end() {
    if (peek().kind != LexKind::End) {
      fail(peek(), peek().kind == LexKind::Eof ? "missing '.' at end of clause"
                                               : "operator expected, got '" + peek().text + "'");
    }
    next();
  }

  void expect_punct(const char* p) {
    if (peek().kind != LexKind::Punct || peek().text != p) {
      fail(peek(), std::string("expected '") + p + "'");
    }
    next();
  }

  // name of the infix operator at the cursor, or empty
  std::string infix_at() const {
    const LexToken& t = peek();
    if (t.kind == LexKind::Punct && t.text == ",") return ",";
    if (t.kind == LexKind::Name && infix_op(t.text)) return t.text;
    return {};
  }

  Term parse(int max_prec) {
    auto [left, left_prec] = primary(max_prec);
    for (;;) {
      std::string name = infix_at();
      if (name.empty()) break;
      const InfixOp* op = infix_op(name);
      int p = op->priority;
      int left_max = op->type == OpType::YFX ? p : p - 1;
      int right_max = op->type == OpType::XFY ? p : p - 1;
      if (p > max_prec || left_prec > left_max) break;
      next();
      Term right = parse(right_max);
      left = Term::compound(name, {left, right});
      left_prec = p;
    }
    return left;
  }

  std::pair<Term, int> primary(int max_prec) {
    const LexToken& t = next();
    switch (t.kind) {
      case LexKind::Int:
        return {Term::integer(t.int_value), 0};
      case LexKind::Float:
        return {Term::floating(t.float_value), 0};
      case LexKind::Var:
        return {scope_.get(t.text), 0};
      case LexKind::Punct:
        if (t.text == "(") {
          Term inner = parse(1200);
          expect_punct(")");
          return {inner, 0};
        }
        fail(t, "unexpected '" + t.text + "'");
      case LexKind::End:
        fail(t, "unexpected end of clause");
      case LexKind::Eof:
        fail(t, "unexpected end of input");
      case LexKind::Name:
      case LexKind::QuotedName:
        break;
    }
    const LexToken& after = peek();
    bool functional = after.kind == LexKind::Punct && after.text == "(" && !after.layout_before;
    if (functional) {
      next();
      std::vector<Term> args;
      args.push_back(parse(999));
      while (peek().kind == LexKind::Punct && peek().text == ",") {
        next();
        args.push_back(parse(999));
      }
      expect_punct(")");
      return {Term::compound(t.text, std::move(args)), 0};
    }
    if (t.kind == LexKind::Name && t.text == "-" && !after.layout_before &&
        (after.kind == LexKind::Int || after.kind == LexKind::Float)) {
      next();
      if (after.kind == LexKind::Int) return {Term::integer(-after.int_value), 0};
      return {Term::floating(-after.float_value), 0};
    }
    if (t.kind == LexKind::Name) {
      int p = prefix_op(t.text);
      if (p > 0 && starts_term(after)) {
        int prec = std::min(p, max_prec);
        Term arg = parse(prec - 1);
        return {Term::compound(t.text, {arg}), prec};
      }
    }
    return {Term::atom(t.text), 0};
  }

  bool starts_term(const LexToken& t) const {
    switch (t.kind) {
      case LexKind::Int:
      case LexKind::Float:
      case LexKind::Var:
      case LexKind::QuotedName:
        return true;
      case LexKind::Name:
        return !infix_op(t.text) || t.text == "-";
      case LexKind::Punct:
        return t.text == "(";
      default:
        return false;
    }
  }

  static void flatten_conj(const Term& t, std::vector<Term>& out) {
    if (t.is_compound() && t.arity() == 2 && t.symbol().name() == ",") {
      flatten_conj(t.arg(0), out);
      flatten_conj(t.arg(1), out);
    } else {
      out.push_back(t);
    }
  }

  void check_goal(const Term& g, const LexToken& at) const {
    if (g.is_number()) fail(at, "a number is not a callable goal: " + to_string(g));
  }

  Clause make_clause(const Term& t, const LexToken& at) {
    Clause c;
    c.line = at.line;
    Term head = t;
    if (t.is_compound() && t.arity() == 2 && t.symbol().name() == ":-") {
      head = t.arg(0);
      flatten_conj(t.arg(1), c.body);
      for (const Term& g : c.body) check_goal(g, at);
    }
    if (!head.is_callable()) fail(at, "clause head is not callable: " + to_string(head));
    if (head.symbol().name() == "," || head.symbol().name() == ":-") {
      fail(at, "malformed clause head");
    }
    c.head = head;
    c.var_count = static_cast<std::uint32_t>(scope_.names.size());
    c.var_names = scope_.names;
    return c;
  }

  static std::vector<Term> comma_list(const Term& t) {
    std::vector<Term> out;
    flatten_conj(t, out);
    return out;
  }

  static std::optional<PredicateKey> name_arity(const Term& t) {
    if (!t.is_compound() || t.arity() != 2 || t.symbol().name() != "/") return std::nullopt;
    if (!t.arg(0).is_atom() || !t.arg(1).is_int() || t.arg(1).as_int() < 0) return std::nullopt;
    return PredicateKey{t.arg(0).symbol(), static_cast<std::uint32_t>(t.arg(1).as_int())};
  }

  void directive(Program& prog, const Term& d, const LexToken& at) {
    std::string name = d.is_callable() ? d.symbol().name() : "";
    if (name == "table" && d.arity() == 1) {
      for (const Term& spec : comma_list(d.arg(0))) table_spec(prog, spec, at);
      return;
    }
    if (name == "table_strategy" && d.arity() == 1) {
      auto parts = comma_list(d.arg(0));
      auto pred = parts.size() == 2 ? name_arity(parts[0]) : std::nullopt;
      std::optional<Strategy> s;
      if (parts.size() == 2 && parts[1].is_atom()) s = parse_strategy(parts[1].symbol().name());
      if (!pred || !s) fail(at, "expected ':- table_strategy name/arity, local|batched.'");
      if (prog.strategy_for(*pred)) {
        fail(at, "duplicate table_strategy for " + pred->to_string());
      }
      prog.strategy_overrides.push_back({*pred, *s, at.line});
      return;
    }
    fail(at, "unknown directive: " + to_string(d));
  }

  void table_spec(Program& prog, const Term& spec, const LexToken& at) {
    TableDecl decl;
    decl.line = at.line;
    if (auto pred = name_arity(spec)) {
      decl.pred = *pred;
    } else if (spec.is_compound()) {
      decl.pred = {spec.symbol(), static_cast<std::uint32_t>(spec.arity())};
      std::vector<Mode> modes;
      for (const Term& m : spec.args()) {
        auto mode = m.is_atom() ? parse_mode(m.symbol().name()) : std::nullopt;
        if (!mode) fail(at, "unknown mode '" + to_string(m) + "' for " + decl.pred.to_string());
        modes.push_back(*mode);
      }
      decl.modes = std::move(modes);
    } else {
      fail(at, "malformed table declaration: " + to_string(spec));
    }
    if (prog.table_decl(decl.pred)) {
      fail(at, "duplicate table declaration for " + decl.pred.to_string());
    }
    prog.tables.push_back(std::move(decl));
  }

  std::vector<LexToken> toks_;
  std::size_t pos_ = 0;
  VarScope scope_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Query parse_query(std::string_view text) { return Parser(text).query(); }

}  // namespace modetab
