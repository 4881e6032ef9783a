#include "modetab/engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <variant>

#include "modetab/answer_insert.hpp"
#include "modetab/builtins.hpp"
#include "modetab/error.hpp"
#include "modetab/unify.hpp"

namespace modetab {

std::string Solution::to_string() const {
  if (bindings.empty()) return "true";
  std::string out;
  for (const auto& [name, value] : bindings) {
    if (!out.empty()) out += ", ";
    out += name + "=" + modetab::to_string(value);
  }
  return out;
}

namespace {

struct Generator;

/// A resolvent: goals still to prove, with every binding made so far
/// already applied. `templ` carries the bindings the owner cares about.
struct Node {
  Term templ;
  std::vector<Term> goals;
  Generator* owner = nullptr;  // null: the top-level query
  VarId next_var = 0;          // first variable id free for renaming
};

struct Consumer {
  std::int64_t id = 0;
  Generator* target = nullptr;
  Generator* owner = nullptr;
  Term templ;
  std::vector<Term> rest;
  std::vector<VarId> call_vars;
  VarId next_var = 0;
  AnswerLeaf* last = nullptr;                 // local: last consumed leaf
  std::deque<std::vector<Term>> pending;      // batched: undelivered events
  bool scheduled = false;
};

struct Generator {
  SubgoalFrame* frame = nullptr;
  Term call;
  std::vector<VarId> call_vars;
  VarId next_var = 0;
  std::uint64_t dfn = 0;
  std::uint64_t leader = 0;
  Strategy strategy = Strategy::Local;
  std::string pred;
  std::vector<Consumer*> consumers;

  bool complete() const { return frame->is_complete(); }
};

struct ExpandTask {
  Node node;
};
struct ClauseTask {
  Generator* gen;
  std::size_t clause;
};
struct ResumeTask {
  Consumer* consumer;
};
struct CheckTask {
  Generator* gen;
};
using Task = std::variant<ExpandTask, ClauseTask, ResumeTask, CheckTask>;

/// Candidate clauses per predicate, keyed on an atomic first argument.
struct ClauseIndex {
  std::vector<std::size_t> all;
  std::vector<std::size_t> open;  // variable first argument
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_key;

  void add(std::size_t i, const Term& head) {
    all.push_back(i);
    if (head.arity() == 0 || head.arg(0).is_var()) {
      open.push_back(i);
      for (auto& [key, list] : by_key) list.push_back(i);
    } else if (!head.arg(0).is_compound()) {
      auto [it, inserted] = by_key.try_emplace(head.arg(0), open);
      it->second.push_back(i);
    }
  }

  const std::vector<std::size_t>& candidates(const Term& goal) const {
    if (goal.arity() == 0) return all;
    const Term& a = goal.arg(0);
    if (a.is_var() || a.is_compound()) return all;
    auto it = by_key.find(a);
    return it == by_key.end() ? open : it->second;
  }
};

PredicateKey key_of(const Term& goal) {
  return {goal.symbol(), static_cast<std::uint32_t>(goal.arity())};
}

template <class E>
[[noreturn]] void rethrow_in(const E& e, const std::string& context) {
  throw E(std::string(e.what()) + context);
}

}  // namespace

struct Engine::Impl {
  Program program;
  EngineOptions opts;
  TableSpace tables;
  std::unordered_map<PredicateKey, ClauseIndex, PredicateKeyHash> index;

  std::vector<std::unique_ptr<Generator>> gens;
  std::unordered_map<const SubgoalFrame*, Generator*> gen_of;
  std::vector<std::unique_ptr<Consumer>> consumers;
  std::vector<Task> agenda;
  std::vector<Term> solutions;
  Stats stats;
  std::uint64_t next_dfn = 0;
  std::int64_t next_consumer = 0;

  Impl(const Program& p, EngineOptions o) : program(p), opts(std::move(o)) {
    for (const Diagnostic& d : validate(program)) {
      if (d.is_error()) {
        throw StructureError("line " + std::to_string(d.line) + ": " + d.message);
      }
    }
    for (const TableDecl& d : program.tables) tables.declare(d.pred, d.mode_array());
    for (std::size_t i = 0; i < program.clauses.size(); ++i) {
      const Clause& c = program.clauses[i];
      index[c.predicate()].add(i, c.head);
    }
  }

  Strategy strategy_for(const PredicateKey& pred) const {
    return program.strategy_for(pred).value_or(opts.strategy);
  }

  void emit(Event e) {
    if (opts.on_event) opts.on_event(e);
  }

  // ---- node construction

  void push_node(Node n) {
    ++stats.derivations;
    if (opts.max_derivations && stats.derivations > opts.max_derivations) {
      throw ResourceError("derivation limit of " + std::to_string(opts.max_derivations) +
                          " exceeded");
    }
    agenda.push_back(ExpandTask{std::move(n)});
  }

  /// The resolvent of `n` after its first goal was replaced by `body`.
  static Node child(const Node& n, const Bindings& b, std::vector<Term> body, VarId next_var) {
    Node out;
    out.owner = n.owner;
    out.next_var = next_var;
    out.templ = resolve(n.templ, b);
    out.goals = std::move(body);
    for (Term& g : out.goals) g = resolve(g, b);
    out.goals.reserve(out.goals.size() + n.goals.size() - 1);
    for (std::size_t i = 1; i < n.goals.size(); ++i) out.goals.push_back(resolve(n.goals[i], b));
    return out;
  }

  /// Continuation of a tabled call after binding the call's free
  /// variables to one answer.
  static Node answer_node(const Term& templ, std::span<const Term> rest,
                          const std::vector<VarId>& call_vars, VarId next_var,
                          std::vector<Term> answer, Generator* owner) {
    Bindings b;
    VarId bound = next_var;
    for (std::size_t i = 0; i < answer.size(); ++i) {
      Term t = shift_vars(answer[i], next_var);
      bound = std::max(bound, var_bound(t));
      b.bind(call_vars[i], std::move(t));
    }
    Node out;
    out.owner = owner;
    out.next_var = bound;
    out.templ = resolve(templ, b);
    out.goals.reserve(rest.size());
    for (const Term& g : rest) out.goals.push_back(resolve(g, b));
    return out;
  }

  // ---- SCC bookkeeping

  static bool in_scc(const Consumer& c) {
    return c.owner && !c.owner->complete() && c.owner->leader == c.target->leader;
  }

  static bool local_deliverable(const Consumer& c) {
    return c.target->complete() || in_scc(c);
  }

  static bool has_unconsumed(const Consumer& c) {
    return next_valid(*c.target->frame, c.last) != nullptr;
  }

  void schedule(Consumer& c) {
    if (c.scheduled) return;
    c.scheduled = true;
    agenda.push_back(ResumeTask{&c});
  }

  void merge_sccs(Generator& owner, Generator& target) {
    std::uint64_t l = std::min(owner.leader, target.leader);
    for (auto it = gens.rbegin(); it != gens.rend() && (*it)->dfn >= l; ++it) {
      Generator& g = **it;
      if (!g.complete()) g.leader = std::min(g.leader, l);
    }
  }

  // ---- main loop

  void run() {
    while (!agenda.empty()) {
      Task task = std::move(agenda.back());
      agenda.pop_back();
      if (auto* e = std::get_if<ExpandTask>(&task)) {
        expand(e->node);
      } else if (auto* c = std::get_if<ClauseTask>(&task)) {
        resolve_clause(*c->gen, c->clause);
      } else if (auto* r = std::get_if<ResumeTask>(&task)) {
        resume(*r->consumer);
      } else {
        check_completion(*std::get<CheckTask>(task).gen);
      }
    }
  }

  void expand(const Node& n) {
    if (n.goals.empty()) {
      if (n.owner) {
        add_answer(*n.owner, n.templ);
      } else {
        solutions.push_back(n.templ);
      }
      return;
    }
    const Term& goal = n.goals.front();
    if (goal.is_var()) throw InstantiationError("unbound goal");
    if (!goal.is_callable()) throw TypeError("goal is not callable: " + to_string(goal));
    PredicateKey key = key_of(goal);
    if (is_builtin(key)) {
      builtin(n, goal);
    } else if (TableEntry* entry = tables.find(key)) {
      call_tabled(n, goal, *entry);
    } else {
      call_clauses(n, goal, key);
    }
  }

  std::string context(const Node& n, const Term& goal) const {
    return " (goal " + to_string(goal) + (n.owner ? " in " + n.owner->pred : "") + ")";
  }

  void builtin(const Node& n, const Term& goal) {
    Bindings b;
    bool ok = false;
    try {
      ok = eval_builtin(goal, b);
    } catch (const InstantiationError& e) {
      rethrow_in(e, context(n, goal));
    } catch (const TypeError& e) {
      rethrow_in(e, context(n, goal));
    } catch (const EvaluationError& e) {
      rethrow_in(e, context(n, goal));
    }
    if (ok) push_node(child(n, b, {}, n.next_var));
  }

  void call_clauses(const Node& n, const Term& goal, const PredicateKey& key) {
    auto it = index.find(key);
    if (it == index.end()) {
      throw ExistenceError("unknown predicate " + key.to_string() + context(n, goal));
    }
    const auto& cands = it->second.candidates(goal);
    std::vector<Node> kids;
    for (std::size_t i : cands) {
      const Clause& c = program.clauses[i];
      Term head = shift_vars(c.head, n.next_var);
      Bindings b;
      if (!unify(head, goal, b)) continue;
      std::vector<Term> body;
      body.reserve(c.body.size());
      for (const Term& g : c.body) body.push_back(shift_vars(g, n.next_var));
      kids.push_back(child(n, b, std::move(body), n.next_var + c.var_count));
    }
    for (auto k = kids.rbegin(); k != kids.rend(); ++k) push_node(std::move(*k));
  }

  void resolve_clause(Generator& gen, std::size_t i) {
    const Clause& c = program.clauses[i];
    Term head = shift_vars(c.head, gen.next_var);
    Bindings b;
    if (!unify(head, gen.call, b)) return;
    Node n;
    n.owner = &gen;
    n.next_var = gen.next_var + c.var_count;
    n.templ = resolve(gen.call, b);
    n.goals.reserve(c.body.size());
    for (const Term& g : c.body) n.goals.push_back(resolve(shift_vars(g, gen.next_var), b));
    push_node(std::move(n));
  }

  // ---- tabled calls

  Consumer& new_consumer(Generator& target, const Node& n, std::vector<VarId> call_vars) {
    auto c = std::make_unique<Consumer>();
    c->id = next_consumer++;
    c->target = &target;
    c->owner = n.owner;
    c->templ = n.templ;
    c->rest.assign(n.goals.begin() + 1, n.goals.end());
    c->call_vars = std::move(call_vars);
    c->next_var = n.next_var;
    consumers.push_back(std::move(c));
    target.consumers.push_back(consumers.back().get());
    return *consumers.back();
  }

  void call_tabled(const Node& n, const Term& goal, TableEntry& entry) {
    SubgoalLookup look = subgoal_lookup_insert(entry, goal.args());
    SubgoalFrame& frame = *look.frame;
    std::span<const Term> rest(n.goals.begin() + 1, n.goals.end());

    if (frame.is_complete()) {
      std::vector<Node> kids;
      for (AnswerLeaf* l = next_valid(frame, nullptr); l; l = next_valid(frame, l)) {
        kids.push_back(
            answer_node(n.templ, rest, look.call_vars, n.next_var, answer_terms(*l), n.owner));
      }
      for (auto k = kids.rbegin(); k != kids.rend(); ++k) push_node(std::move(*k));
      return;
    }

    if (look.is_new) {
      auto g = std::make_unique<Generator>();
      g->frame = &frame;
      g->call = goal;
      g->call_vars = look.call_vars;
      g->next_var = var_bound(goal);
      g->dfn = g->leader = next_dfn++;
      g->strategy = strategy_for(entry.predicate());
      g->pred = entry.predicate().to_string();
      Generator& gen = *g;
      gens.push_back(std::move(g));
      gen_of[&frame] = &gen;
      new_consumer(gen, n, std::move(look.call_vars));
      agenda.push_back(CheckTask{&gen});
      auto it = index.find(entry.predicate());
      if (it == index.end()) return;
      const auto& cands = it->second.candidates(goal);
      for (auto k = cands.rbegin(); k != cands.rend(); ++k) agenda.push_back(ClauseTask{&gen, *k});
      return;
    }

    Generator& gen = *gen_of.at(&frame);
    if (n.owner) merge_sccs(*n.owner, gen);
    Consumer& c = new_consumer(gen, n, std::move(look.call_vars));
    if (gen.strategy == Strategy::Batched) {
      for (AnswerLeaf* l = next_valid(frame, nullptr); l; l = next_valid(frame, l)) {
        c.pending.push_back(answer_terms(*l));
      }
      if (!c.pending.empty()) schedule(c);
    } else if (local_deliverable(c) && has_unconsumed(c)) {
      schedule(c);
    }
  }

  void add_answer(Generator& gen, const Term& templ) {
    Bindings b;
    if (!match(gen.call, templ, b)) {
      throw StructureError("derived answer is not an instance of its call " + gen.pred);
    }
    std::vector<Term> terms;
    terms.reserve(gen.call_vars.size());
    for (VarId v : gen.call_vars) terms.push_back(resolve(Term::var(v), b));
    InsertOutcome out = insert_answer(*gen.frame, terms, gen.pred);
    emit({"insert", gen.pred, to_string(out.kind), -1, gen.frame->id(), false, false});
    if (!out.changed_table()) return;
    ++stats.insertions;
    stats.invalidations += out.invalidated;

    if (gen.strategy == Strategy::Batched) {
      std::vector<Term> stored = answer_terms(*out.leaf);
      for (Consumer* c : gen.consumers) {
        c->pending.push_back(stored);
        schedule(*c);
      }
    }
    // local: consumers inside the SCC pick new answers up in rounds driven
    // by the leader's completion check; outside callers wait for completion
  }

  void deliver(Consumer& c, std::vector<Term> answer, std::vector<Node>& kids) {
    ++stats.propagations;
    emit({"deliver", c.target->pred, "", c.id, c.target->frame->id(), c.target->complete(),
          in_scc(c)});
    kids.push_back(answer_node(c.templ, c.rest, c.call_vars, c.next_var, std::move(answer),
                               c.owner));
  }

  void resume(Consumer& c) {
    c.scheduled = false;
    ++stats.consumer_resumptions;
    std::vector<Node> kids;
    if (c.target->strategy == Strategy::Batched) {
      while (!c.pending.empty()) {
        deliver(c, std::move(c.pending.front()), kids);
        c.pending.pop_front();
      }
    } else if (local_deliverable(c)) {
      const SubgoalFrame& frame = *c.target->frame;
      for (AnswerLeaf* l = next_valid(frame, c.last); l; l = next_valid(frame, l)) {
        deliver(c, answer_terms(*l), kids);
        c.last = l;
      }
    }
    for (auto k = kids.rbegin(); k != kids.rend(); ++k) push_node(std::move(*k));
  }

  // ---- completion

  bool active(const Consumer& c) const {
    if (c.target->strategy == Strategy::Batched) return !c.pending.empty();
    return in_scc(c) && has_unconsumed(c);
  }

  void check_completion(Generator& gen) {
    if (gen.complete() || gen.leader != gen.dfn) return;
    std::vector<Generator*> members;
    for (auto it = gens.rbegin(); it != gens.rend() && (*it)->dfn >= gen.dfn; ++it) {
      if (!(*it)->complete() && (*it)->leader == gen.dfn) members.push_back(it->get());
    }
    std::vector<Consumer*> busy;
    for (Generator* m : members) {
      for (Consumer* c : m->consumers) {
        if (active(*c)) busy.push_back(c);
      }
    }
    if (!busy.empty()) {
      agenda.push_back(CheckTask{&gen});
      for (Consumer* c : busy) {
        c->scheduled = true;
        agenda.push_back(ResumeTask{c});
      }
      return;
    }

    for (Generator* m : members) {
      for (Consumer* c : m->consumers) {
        if (c->last && !c->last->valid) {
          AnswerLeaf* kept = nullptr;
          for (AnswerLeaf* l = m->frame->first_answer(); l && l != c->last; l = l->next) {
            if (l->valid) kept = l;
          }
          c->last = kept;
        }
      }
    }
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      complete_table(*(*it)->frame);
      emit({"complete", (*it)->pred, "", -1, (*it)->frame->id(), true, false});
    }
    for (Generator* m : members) {
      for (Consumer* c : m->consumers) {
        bool ready = m->strategy == Strategy::Batched ? !c->pending.empty() : has_unconsumed(*c);
        if (ready) schedule(*c);
      }
    }
  }

  // ---- queries

  QueryResult solve(const Query& q) {
    stats = Stats();
    agenda.clear();
    solutions.clear();

    std::vector<Term> qvars;
    for (const auto& [name, id] : q.vars) qvars.push_back(Term::var(id));
    Term templ = Term::compound("$answer", qvars);

    Node root;
    root.templ = templ;
    root.goals = q.goals;
    root.next_var = q.var_count;
    try {
      push_node(std::move(root));
      run();
    } catch (...) {
      agenda.clear();
      throw;
    }

    std::vector<Term> rows;
    const SubgoalFrame* top = top_frame(q);
    if (top) {
      VarNumbering vars;
      const Term& goal = q.goals.front();
      TableEntry& entry = *tables.find(key_of(goal));
      call_tokens(entry.mode_array(), goal.args(), vars);
      for (AnswerLeaf* l = next_valid(*top, nullptr); l; l = next_valid(*top, l)) {
        rows.push_back(
            answer_node(templ, {}, vars.order(), q.var_count, answer_terms(*l), nullptr).templ);
      }
    } else {
      rows = std::move(solutions);
    }

    QueryResult result;
    result.stats = stats;
    for (const Term& row : rows) {
      Solution s;
      for (std::size_t i = 0; i < q.vars.size(); ++i) {
        s.bindings.emplace_back(q.vars[i].first, row.is_compound() ? row.arg(i) : row);
      }
      result.solutions.push_back(std::move(s));
    }
    solutions.clear();
    return result;
  }

  /// The completed frame answering a query made of one tabled goal.
  const SubgoalFrame* top_frame(const Query& q) {
    if (q.goals.size() != 1 || !q.goals.front().is_callable()) return nullptr;
    const Term& goal = q.goals.front();
    TableEntry* entry = tables.find(key_of(goal));
    if (!entry) return nullptr;
    VarNumbering vars;
    TrieNode* leaf = entry->subgoals().lookup(call_tokens(entry->mode_array(), goal.args(), vars));
    if (!leaf) return nullptr;
    auto* frame = std::get_if<SubgoalFrame*>(&leaf->payload());
    return frame && (*frame)->is_complete() ? *frame : nullptr;
  }
};

Engine::Engine(const Program& program, EngineOptions options)
    : impl_(std::make_unique<Impl>(program, std::move(options))) {}
Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

QueryResult Engine::solve(const Query& query) { return impl_->solve(query); }
QueryResult Engine::solve(std::string_view query_text) {
  return impl_->solve(parse_query(query_text));
}

const TableSpace& Engine::tables() const { return impl_->tables; }
Strategy Engine::strategy_for(const PredicateKey& pred) const {
  return impl_->strategy_for(pred);
}

QueryResult solve(const Program& program, const Query& query, EngineOptions options) {
  return Engine(program, std::move(options)).solve(query);
}

QueryResult solve(const Program& program, std::string_view query_text, EngineOptions options) {
  return solve(program, parse_query(query_text), std::move(options));
}

}  // namespace modetab
