#include <unordered_set>

#include "modetab/builtins.hpp"
#include "modetab/error.hpp"
#include "modetab/program.hpp"

namespace modetab {

namespace {

Diagnostic error(std::string msg, std::size_t line) {
  return {Diagnostic::Severity::Error, std::move(msg), line};
}

Diagnostic warning(std::string msg, std::size_t line) {
  return {Diagnostic::Severity::Warning, std::move(msg), line};
}

PredicateKey key_of(const Term& goal) {
  return {goal.symbol(), static_cast<std::uint32_t>(goal.arity())};
}

}  // namespace

std::vector<Diagnostic> validate(const Program& program) {
  std::vector<Diagnostic> out;
  std::unordered_set<PredicateKey, PredicateKeyHash> defined;
  for (const Clause& c : program.clauses) defined.insert(c.predicate());

  for (const TableDecl& d : program.tables) {
    try {
      d.mode_array();
    } catch (const ModeError& e) {
      out.push_back(error(e.what(), d.line));
    }
    if (!defined.count(d.pred)) {
      out.push_back(warning("tabled predicate " + d.pred.to_string() + " has no clauses", d.line));
    }
    for (const Clause& c : program.clauses) {
      const PredicateKey k = c.predicate();
      if (k.name == d.pred.name && k.arity != d.pred.arity) {
        out.push_back(error("clause for " + k.to_string() + " does not match table declaration " +
                                d.pred.to_string(),
                            c.line));
      }
    }
  }

  for (const StrategyOverride& o : program.strategy_overrides) {
    if (!program.is_tabled(o.pred)) {
      out.push_back(error("strategy given for untabled predicate " + o.pred.to_string(), o.line));
    }
  }

  std::unordered_set<PredicateKey, PredicateKeyHash> reported;
  for (const Clause& c : program.clauses) {
    if (is_builtin(c.predicate())) {
      out.push_back(error("cannot redefine builtin " + c.predicate().to_string(), c.line));
    }
    for (const Term& g : c.body) {
      if (g.is_var()) {
        out.push_back(error("variable goals are not supported", c.line));
        continue;
      }
      if (!g.is_callable()) continue;
      PredicateKey k = key_of(g);
      if (is_builtin(k) || defined.count(k) || program.is_tabled(k)) continue;
      if (reported.insert(k).second) {
        out.push_back(error("call to undefined predicate " + k.to_string(), c.line));
      }
    }
  }
  return out;
}

}  // namespace modetab
