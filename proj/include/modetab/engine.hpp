#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modetab/program.hpp"
#include "modetab/strategy.hpp"
#include "modetab/table.hpp"

namespace modetab {

struct Stats {
  std::uint64_t derivations = 0;           // resolution steps of any kind
  std::uint64_t insertions = 0;            // answers that changed a table
  std::uint64_t invalidations = 0;         // answers invalidated by replacement
  std::uint64_t propagations = 0;          // answers delivered to consumers
  std::uint64_t consumer_resumptions = 0;  // consumer resume steps
};

/// One record of the optional event log.
///   insert    an answer reached a table; `outcome` is the insertion kind
///   deliver   a consumer received one answer
///   complete  a subgoal frame was completed
struct Event {
  std::string event;
  std::string predicate;  // name/arity
  std::string outcome;
  std::int64_t consumer = -1;
  std::uint64_t frame = 0;
  bool frame_complete = false;  // state of the frame when the event fired
  bool in_scc = false;          // deliver: consumer owned by the frame's SCC
};

struct EngineOptions {
  Strategy strategy = Strategy::Local;
  /// 0 means unlimited; otherwise ResourceError once exceeded.
  std::uint64_t max_derivations = 0;
  std::function<void(const Event&)> on_event;
};

struct Solution {
  std::vector<std::pair<std::string, Term>> bindings;  // query variable order

  /// `X=a, Y=1`, or `true` without named variables.
  std::string to_string() const;
};

struct QueryResult {
  std::vector<Solution> solutions;
  Stats stats;
};

/// Tabled evaluation of queries against one program. Tables persist
/// between queries of the same engine.
class Engine {
 public:
  explicit Engine(const Program& program, EngineOptions options = {});
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  QueryResult solve(const Query& query);
  QueryResult solve(std::string_view query_text);

  const TableSpace& tables() const;
  Strategy strategy_for(const PredicateKey& pred) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

QueryResult solve(const Program& program, const Query& query, EngineOptions options = {});
QueryResult solve(const Program& program, std::string_view query_text,
                  EngineOptions options = {});

}  // namespace modetab
