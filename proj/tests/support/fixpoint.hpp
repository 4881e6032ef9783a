#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "modetab/program.hpp"

namespace testsupport {

using modetab::Program;
using modetab::Term;

struct TermLess {
  bool operator()(const Term& a, const Term& b) const;
};

/// Ground atoms per predicate ("name/arity").
using Model = std::map<std::string, std::set<Term, TermLess>>;

/// Naive bottom-up evaluation of a function-free program: every round
/// applies all rules to the previous model, then folds each tabled
/// predicate through its modes (index, min, max, all). Untabled
/// predicates are plain relations. Throws std::runtime_error when no
/// fixpoint is reached within `max_rounds`.
Model fixpoint(const Program& program, int max_rounds = 1000);

/// Atoms of `model` that are instances of `goal`.
std::set<Term, TermLess> instances(const Model& model, const Term& goal);

}  // namespace testsupport
