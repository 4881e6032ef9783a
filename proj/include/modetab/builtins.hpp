#pragma once

#include "modetab/modes.hpp"
#include "modetab/unify.hpp"

namespace modetab {

/// true/0, fail/0, =/2, is/2 and the arithmetic comparisons.
bool is_builtin(const PredicateKey& pred);

/// Runs a builtin goal whose variables are already resolved. Returns
/// false on failure; new bindings are appended to `b`. Throws
/// InstantiationError, TypeError or EvaluationError.
bool eval_builtin(const Term& goal, Bindings& b);

/// Evaluates a ground arithmetic expression over + - * / min max and
/// unary minus. Integer results stay integers; `/` of two integers is an
/// integer only when exact.
Term eval_arith(const Term& expr);

/// Numeric comparison: negative, zero or positive.
int compare_numbers(const Term& a, const Term& b);

}  // namespace modetab
