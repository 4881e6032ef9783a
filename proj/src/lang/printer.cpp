#include "modetab/program.hpp"

namespace modetab {

namespace {

std::string pred_text(const PredicateKey& p) {
  return to_string(Term::compound("/", {Term::atom(p.name), Term::integer(p.arity)}));
}

std::string decl_text(const TableDecl& d) {
  if (!d.modes) return ":- table " + pred_text(d.pred) + ".";
  std::vector<Term> args;
  for (Mode m : *d.modes) args.push_back(Term::atom(mode_name(m)));
  return ":- table " + to_string(Term::compound(d.pred.name, std::move(args))) + ".";
}

}  // namespace

std::string print_clause(const Clause& clause) {
  auto name = [&](VarId v) -> std::string {
    if (v < clause.var_names.size()) {
      const std::string& n = clause.var_names[v];
      if (n != "_") return n;
    }
    return "_G" + std::to_string(v);
  };
  std::string out = to_string(clause.head, name);
  for (std::size_t i = 0; i < clause.body.size(); ++i) {
    out += i == 0 ? " :-\n    " : ",\n    ";
    const Term& g = clause.body[i];
    bool paren = g.is_compound() && g.arity() == 2 &&
                 (g.symbol().name() == "," || g.symbol().name() == ":-");
    if (paren) out += '(';
    out += to_string(g, name);
    if (paren) out += ')';
  }
  return out + ".";
}

std::string print_program(const Program& program) {
  std::string out;
  for (const TableDecl& d : program.tables) out += decl_text(d) + "\n";
  for (const StrategyOverride& o : program.strategy_overrides) {
    out += ":- table_strategy " + pred_text(o.pred) + ", " + std::string(strategy_name(o.strategy)) + ".\n";
  }
  if (!out.empty() && !program.clauses.empty()) out += "\n";
  for (const Clause& c : program.clauses) out += print_clause(c) + "\n";
  return out;
}

}  // namespace modetab
