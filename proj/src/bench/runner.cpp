#include <chrono>

#include <json.hpp>

#include "modetab/bench.hpp"

namespace modetab::bench {

BenchReport run_bench(const Instance& inst, Strategy strategy) {
  Program program = parse_program(program_text(inst));
  Query query = parse_query(query_text(inst));
  EngineOptions opts;
  opts.strategy = strategy;

  BenchReport rep;
  rep.kind = inst.kind;
  rep.size = inst.size;
  rep.seed = inst.seed;
  rep.strategy = strategy;
  for (std::size_t run = 0; run < rep.ms.size(); ++run) {
    auto start = std::chrono::steady_clock::now();
    QueryResult result = solve(program, query, opts);
    auto stop = std::chrono::steady_clock::now();
    rep.ms[run] = std::chrono::duration<double, std::milli>(stop - start).count();
    if (run == 0) {
      Verdict v = check(inst, result.solutions);
      rep.answers = result.solutions.size();
      rep.match = v.match;
      rep.detail = v.detail;
      rep.stats = result.stats;
    }
  }
  return rep;
}

std::string reports_json(const std::vector<BenchReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const BenchReport& r : reports) {
    nlohmann::ordered_json j;
    j["instance"] = {{"name", bench_name(r.kind)}, {"size", r.size}, {"seed", r.seed}};
    j["strategy"] = strategy_name(r.strategy);
    j["answers"] = r.answers;
    j["match"] = r.match;
    j["ms"] = r.ms;
    j["stats"] = {{"insertions", r.stats.insertions},
                  {"invalidations", r.stats.invalidations},
                  {"propagations", r.stats.propagations},
                  {"resumptions", r.stats.consumer_resumptions}};
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace modetab::bench
