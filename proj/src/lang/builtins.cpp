#include "modetab/builtins.hpp"

#include <cmath>
#include <string_view>

#include "modetab/error.hpp"

namespace modetab {

namespace {

bool is_comparison(std::string_view n) {
  return n == "<" || n == ">" || n == "=<" || n == ">=" || n == "=:=" || n == "=\\=";
}

double as_double(const Term& t) {
  return t.is_int() ? static_cast<double>(t.as_int()) : t.as_float();
}

Term checked_float(double v, std::string_view op) {
  if (!std::isfinite(v)) throw EvaluationError("non-finite result of " + std::string(op));
  return Term::floating(v);
}

[[noreturn]] void overflow(std::string_view op) {
  throw EvaluationError("integer overflow in " + std::string(op));
}

Term binary(std::string_view op, const Term& x, const Term& y) {
  bool ints = x.is_int() && y.is_int();
  if (op == "+") {
    if (!ints) return checked_float(as_double(x) + as_double(y), op);
    std::int64_t r;
    if (__builtin_add_overflow(x.as_int(), y.as_int(), &r)) overflow(op);
    return Term::integer(r);
  }
  if (op == "-") {
    if (!ints) return checked_float(as_double(x) - as_double(y), op);
    std::int64_t r;
    if (__builtin_sub_overflow(x.as_int(), y.as_int(), &r)) overflow(op);
    return Term::integer(r);
  }
  if (op == "*") {
    if (!ints) return checked_float(as_double(x) * as_double(y), op);
    std::int64_t r;
    if (__builtin_mul_overflow(x.as_int(), y.as_int(), &r)) overflow(op);
    return Term::integer(r);
  }
  if (op == "/") {
    if (as_double(y) == 0.0) throw EvaluationError("division by zero");
    if (ints) {
      std::int64_t a = x.as_int(), b = y.as_int();
      if (b == -1 && a == INT64_MIN) overflow(op);
      if (a % b == 0) return Term::integer(a / b);
    }
    return checked_float(as_double(x) / as_double(y), op);
  }
  if (op == "min") return compare_numbers(y, x) < 0 ? y : x;
  if (op == "max") return compare_numbers(y, x) > 0 ? y : x;
  throw TypeError("unknown arithmetic function " + std::string(op) + "/2");
}

}  // namespace

bool is_builtin(const PredicateKey& pred) {
  const std::string& n = pred.name.name();
  if (pred.arity == 0) return n == "true" || n == "fail";
  if (pred.arity == 2) return n == "=" || n == "is" || is_comparison(n);
  return false;
}

int compare_numbers(const Term& a, const Term& b) {
  if (a.is_int() && b.is_int()) return a.as_int() < b.as_int() ? -1 : a.as_int() > b.as_int();
  long double x = a.is_int() ? static_cast<long double>(a.as_int()) : a.as_float();
  long double y = b.is_int() ? static_cast<long double>(b.as_int()) : b.as_float();
  return x < y ? -1 : x > y;
}

Term eval_arith(const Term& expr) {
  switch (expr.kind()) {
    case TermKind::Int:
    case TermKind::Float:
      return expr;
    case TermKind::Var:
      throw InstantiationError("arithmetic on an unbound variable");
    case TermKind::Atom:
      throw TypeError("not a number: " + to_string(expr));
    case TermKind::Struct:
      break;
  }
  const std::string& op = expr.symbol().name();
  if (expr.arity() == 1 && op == "-") {
    Term v = eval_arith(expr.arg(0));
    if (v.is_float()) return Term::floating(-v.as_float());
    if (v.as_int() == INT64_MIN) overflow(op);
    return Term::integer(-v.as_int());
  }
  if (expr.arity() != 2) {
    throw TypeError("unknown arithmetic function " + op + "/" + std::to_string(expr.arity()));
  }
  return binary(op, eval_arith(expr.arg(0)), eval_arith(expr.arg(1)));
}

bool eval_builtin(const Term& goal, Bindings& b) {
  const std::string& n = goal.symbol().name();
  if (goal.arity() == 0) {
    if (n == "true") return true;
    if (n == "fail") return false;
  } else if (goal.arity() == 2) {
    if (n == "=") return unify(goal.arg(0), goal.arg(1), b);
    if (n == "is") return unify(goal.arg(0), eval_arith(goal.arg(1)), b);
    if (is_comparison(n)) {
      int c = compare_numbers(eval_arith(goal.arg(0)), eval_arith(goal.arg(1)));
      if (n == "<") return c < 0;
      if (n == ">") return c > 0;
      if (n == "=<") return c <= 0;
      if (n == ">=") return c >= 0;
      if (n == "=:=") return c == 0;
      return c != 0;
    }
  }
  throw ExistenceError("unknown builtin " + to_string(goal));
}

}  // namespace modetab
