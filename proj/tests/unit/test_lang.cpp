#include <gtest/gtest.h>

#include <algorithm>

#include "modetab/bench.hpp"
#include "modetab/builtins.hpp"
#include "modetab/error.hpp"
#include "modetab/program.hpp"
#include "modetab/unify.hpp"

using namespace modetab;
using namespace modetab::bench;

namespace {

bool same_program(const Program& a, const Program& b) {
  if (a.clauses.size() != b.clauses.size() || a.tables.size() != b.tables.size()) return false;
  for (std::size_t i = 0; i < a.tables.size(); ++i) {
    if (!(a.tables[i].pred == b.tables[i].pred) || a.tables[i].modes != b.tables[i].modes) return false;
  }
  if (a.strategy_overrides.size() != b.strategy_overrides.size()) return false;
  for (std::size_t i = 0; i < a.clauses.size(); ++i) {
    const Clause &x = a.clauses[i], &y = b.clauses[i];
    if (!(x.head == y.head) || x.body != y.body || x.var_count != y.var_count) return false;
  }
  return true;
}

std::size_t error_count(const std::vector<Diagnostic>& ds) {
  return std::count_if(ds.begin(), ds.end(), [](const Diagnostic& d) { return d.is_error(); });
}

bool mentions(const std::vector<Diagnostic>& ds, const std::string& text) {
  return std::any_of(ds.begin(), ds.end(),
                     [&](const Diagnostic& d) { return d.message.find(text) != std::string::npos; });
}

}  // namespace

TEST(Parse, ClausesAndDirectives) {
  Program p = parse_program(R"(
    :- table path(index, index, min).
    :- table_strategy path/3, batched.
    path(X, Y, C) :- edge(X, Y, C).
    path(X, Y, C) :- path(X, Z, C1), edge(Z, Y, C2), C is C1 + C2.
    edge(a, b, 1).
  )");
  ASSERT_EQ(p.tables.size(), 1u);
  EXPECT_EQ(p.tables[0].pred.to_string(), "path/3");
  EXPECT_EQ(*p.tables[0].modes, (std::vector<Mode>{Mode::Index, Mode::Index, Mode::Min}));
  EXPECT_EQ(p.strategy_for(p.tables[0].pred), Strategy::Batched);
  ASSERT_EQ(p.clauses.size(), 3u);
  EXPECT_EQ(p.clauses[1].body.size(), 3u);
  EXPECT_EQ(p.clauses[1].var_count, 6u);
  EXPECT_EQ(to_string(p.clauses[1].body[2]), "_G2 is (_G4 + _G5)");
  EXPECT_EQ(p.clauses[2].line, 6u);
}

TEST(Parse, TraditionalAndMultipleDeclarations) {
  Program p = parse_program(":- table p/2, q(index, max).\np(a, b).\nq(a, 1).\n");
  ASSERT_EQ(p.tables.size(), 2u);
  EXPECT_TRUE(p.tables[0].traditional());
  EXPECT_FALSE(p.tables[1].traditional());
  EXPECT_TRUE(p.tables[0].mode_array().is_traditional());
}

TEST(Parse, OperatorsAndNumbers) {
  Program p = parse_program("t(X) :- X is 2 - 3 - 4 * -1 / 2, X =\\= 1.5e1, Y = 'hi there'.\n");
  EXPECT_EQ(p.clauses[0].body[1].arg(1), Term::floating(15.0));
  Program q = parse_program("t(X) :- X is 10 - 2 - 3.\n");
  const Term& rhs = q.clauses[0].body[0].arg(1);
  EXPECT_EQ(rhs.symbol().name(), "-");
  EXPECT_EQ(rhs.arg(1), Term::integer(3));  // left associative
  Program r = parse_program("n(-3, - 3, 2.5).\n");
  EXPECT_EQ(r.clauses[0].head.arg(0), Term::integer(-3));
  EXPECT_TRUE(r.clauses[0].head.arg(1).is_compound());
}

TEST(Parse, AnonymousVariablesAreDistinct) {
  Program p = parse_program("p(_, _, X, X).\n");
  EXPECT_EQ(p.clauses[0].var_count, 3u);
  EXPECT_FALSE(p.clauses[0].head.arg(0) == p.clauses[0].head.arg(1));
}

TEST(Parse, Query) {
  Query q = parse_query("path(a, Y, C), C < 10, _Hidden = 1");
  EXPECT_EQ(q.goals.size(), 3u);
  ASSERT_EQ(q.vars.size(), 2u);
  EXPECT_EQ(q.vars[0].first, "Y");
  EXPECT_EQ(q.vars[1].first, "C");
  EXPECT_EQ(q.var_count, 3u);
  EXPECT_NO_THROW(parse_query("p(X)."));
  EXPECT_THROW(parse_query("   "), SyntaxError);
  EXPECT_THROW(parse_query("p(X) q"), SyntaxError);
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_program("p(a).\nq(b :- c.\n");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(parse_program("p(a)\n"), SyntaxError);
  EXPECT_THROW(parse_program(":- table p(index, median).\n"), SyntaxError);
  EXPECT_THROW(parse_program(":- table p/1.\n:- table p/1.\n"), SyntaxError);
  EXPECT_THROW(parse_program(":- table_strategy p/1, eager.\n"), SyntaxError);
  EXPECT_THROW(parse_program(":- dynamic p/1.\n"), SyntaxError);
  EXPECT_THROW(parse_program("3 :- p.\n"), SyntaxError);
  EXPECT_THROW(parse_program("p :- 3.\n"), SyntaxError);
  EXPECT_THROW(parse_program("p('unterminated).\n"), SyntaxError);
}

TEST(Print, RoundTripsHandWrittenProgram) {
  const char* text = R"(
    :- table path(index, index, min, first), reach/2.
    :- table_strategy reach/2, local.
    path(X, Y, C, X) :- edge(X, Y, C).
    path(X, Y, C, Z) :- path(X, Z, C1, _), edge(Z, Y, C2), C is C1 + C2.
    reach(X, Y) :- edge(X, Y, _).
    edge('New York', b, 1.5).
    edge(b, c, -2).
    nested(f(g(X), [], 'a b'), (1 - 2) - 3, 1 - (2 - 3)) :- X = 1, true.
  )";
  Program p = parse_program(text);
  std::string printed = print_program(p);
  Program q = parse_program(printed);
  EXPECT_TRUE(same_program(p, q)) << printed;
  EXPECT_EQ(print_program(q), printed);
}

TEST(Print, RoundTripsGeneratedBenchmarks) {
  for (Benchmark b : all_benchmarks()) {
    Instance inst = generate(b, size_bounds(b).min + 3, 5);
    Program p = parse_program(program_text(inst));
    std::string printed = print_program(p);
    EXPECT_TRUE(same_program(p, parse_program(printed))) << bench_name(b);
  }
}

TEST(Print, ClauseLayout) {
  Program p = parse_program("h(X) :- a(X), b.\nf(1).\n");
  EXPECT_EQ(print_clause(p.clauses[0]), "h(X) :-\n    a(X),\n    b.");
  EXPECT_EQ(print_clause(p.clauses[1]), "f(1).");
}

TEST(Validate, CleanProgram) {
  Program p = parse_program(":- table p(index, min).\np(a, 1).\np(X, C) :- q(X, C).\nq(b, 2).\n");
  EXPECT_EQ(error_count(validate(p)), 0u);
}

TEST(Validate, ReportsProblems) {
  auto ds = validate(parse_program(":- table p(index, min).\np(a, 1, 2).\n"));
  EXPECT_TRUE(mentions(ds, "does not match table declaration p/2"));

  ds = validate(parse_program("p(X) :- undefined_pred(X).\n"));
  EXPECT_EQ(error_count(ds), 1u);
  EXPECT_TRUE(mentions(ds, "undefined_pred/1"));

  ds = validate(parse_program(":- table_strategy p/1, batched.\np(a).\n"));
  EXPECT_EQ(error_count(ds), 1u);

  ds = validate(parse_program("is(X, Y).\n"));
  EXPECT_EQ(error_count(ds), 1u);

  ds = validate(parse_program("p(X) :- X.\n"));
  EXPECT_EQ(error_count(ds), 1u);

  ds = validate(parse_program(":- table p(sum, last).\n"));
  EXPECT_GE(error_count(ds), 1u);

  ds = validate(parse_program(":- table p/1.\n"));
  EXPECT_EQ(error_count(ds), 0u);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].severity, Diagnostic::Severity::Warning);
}

TEST(Unify, BindsAndResolves) {
  Bindings b;
  Term x = Term::var(0), y = Term::var(1);
  Term lhs = Term::compound("f", {x, Term::atom("a")});
  Term rhs = Term::compound("f", {Term::compound("g", {y}), y});
  ASSERT_TRUE(unify(lhs, rhs, b));
  EXPECT_EQ(to_string(resolve(x, b)), "g(a)");
  Bindings c;
  EXPECT_FALSE(unify(Term::compound("f", {x, x}), Term::compound("f", {Term::integer(1), Term::integer(2)}), c));
  Bindings d;
  EXPECT_FALSE(unify(Term::integer(1), Term::floating(1.0), d));
}

TEST(Builtins, Arithmetic) {
  auto eval = [](const std::string& text) {
    Query q = parse_query(text);
    Bindings b;
    for (const Term& g : q.goals) {
      if (!eval_builtin(resolve(g, b), b)) return std::string("fail");
    }
    return to_string(resolve(Term::var(0), b));
  };
  EXPECT_EQ(eval("X is 7 / 2"), "3.5");
  EXPECT_EQ(eval("X is 8 / 2"), "4");
  EXPECT_EQ(eval("X is min(3, 2.5) + max(1, 2)"), "4.5");
  EXPECT_EQ(eval("X is -(4) * 2"), "-8");
  EXPECT_EQ(eval("X = 1, X < 2"), "1");
  EXPECT_EQ(eval("X = 1, X >= 2"), "fail");
  EXPECT_EQ(eval("X = 2, X =:= 2.0"), "2");
  EXPECT_THROW(eval("X is Y + 1"), InstantiationError);
  EXPECT_THROW(eval("X is a + 1"), TypeError);
  EXPECT_THROW(eval("X is 1 / 0"), EvaluationError);
  EXPECT_THROW(eval("X is 9223372036854775807 + 1"), EvaluationError);
  EXPECT_TRUE(is_builtin(PredicateKey{Symbol("is"), 2}));
  EXPECT_FALSE(is_builtin(PredicateKey{Symbol("is"), 3}));
}
