#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "modetab/bench.hpp"
#include "modetab/engine.hpp"
#include "modetab/error.hpp"

using namespace modetab;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Strategy strategy_arg(const std::string& s) {
  auto parsed = parse_strategy(s);
  if (!parsed) throw CLI::ValidationError("--sched", "expected local or batched, got " + s);
  return *parsed;
}

void print_stats(std::ostream& out, const Stats& st) {
  out << "-- stats\n"
      << "derivations: " << st.derivations << "\n"
      << "insertions: " << st.insertions << "\n"
      << "invalidations: " << st.invalidations << "\n"
      << "propagations: " << st.propagations << "\n"
      << "consumer_resumptions: " << st.consumer_resumptions << "\n";
}

struct RunArgs {
  std::string file;
  std::string query;
  std::string sched = "local";
  bool stats = false;
  std::string trace;
  std::uint64_t max_derivations = 0;
};

int cmd_run(const RunArgs& a) {
  Program program = parse_program(read_file(a.file));
  for (const Diagnostic& d : validate(program)) {
    if (!d.is_error()) std::cerr << a.file << ":" << d.line << ": warning: " << d.message << "\n";
  }
  EngineOptions opts;
  opts.strategy = strategy_arg(a.sched);
  opts.max_derivations = a.max_derivations;
  std::ofstream trace;
  if (!a.trace.empty()) {
    trace.open(a.trace);
    if (!trace) throw std::runtime_error("cannot write " + a.trace);
    opts.on_event = [&trace](const Event& e) {
      nlohmann::ordered_json j = {{"event", e.event},
                                  {"predicate", e.predicate},
                                  {"outcome", e.outcome},
                                  {"consumer", e.consumer},
                                  {"frame", e.frame},
                                  {"frame_complete", e.frame_complete},
                                  {"in_scc", e.in_scc}};
      trace << j.dump() << "\n";
    };
  }
  QueryResult result = solve(program, parse_query(a.query), opts);
  for (const Solution& s : result.solutions) std::cout << s.to_string() << "\n";
  if (a.stats) print_stats(std::cout, result.stats);
  return result.solutions.empty() ? 1 : 0;
}

struct BenchArgs {
  std::string name;
  std::uint64_t size = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> sched;
  bool check = false;
  std::string json;
};

int cmd_bench(const BenchArgs& a) {
  auto kind = bench::parse_bench(a.name);
  if (!kind) throw CLI::ValidationError("name", "unknown benchmark " + a.name);
  std::vector<Strategy> strategies;
  for (const std::string& s : a.sched) strategies.push_back(strategy_arg(s));
  if (strategies.empty()) {
    strategies.push_back(Strategy::Local);
    if (*kind != bench::Benchmark::Pagerank) strategies.push_back(Strategy::Batched);
  }
  bench::Instance inst = bench::generate(*kind, a.size, a.seed);

  std::vector<bench::BenchReport> reports;
  bool all_match = true;
  for (Strategy s : strategies) {
    bench::BenchReport r = bench::run_bench(inst, s);
    double avg = (r.ms[0] + r.ms[1] + r.ms[2]) / 3;
    std::printf("%s size=%llu seed=%llu sched=%s answers=%zu match=%s avg_ms=%.2f "
                "insertions=%llu invalidations=%llu propagations=%llu resumptions=%llu  %s\n",
                a.name.c_str(), static_cast<unsigned long long>(r.size),
                static_cast<unsigned long long>(r.seed), std::string(strategy_name(s)).c_str(),
                r.answers, r.match ? "true" : "false", avg,
                static_cast<unsigned long long>(r.stats.insertions),
                static_cast<unsigned long long>(r.stats.invalidations),
                static_cast<unsigned long long>(r.stats.propagations),
                static_cast<unsigned long long>(r.stats.consumer_resumptions), r.detail.c_str());
    all_match = all_match && r.match;
    reports.push_back(std::move(r));
  }
  if (!a.json.empty()) {
    std::string text = bench::reports_json(reports);
    if (a.json == "-") {
      std::cout << text;
    } else {
      std::ofstream out(a.json);
      if (!out) throw std::runtime_error("cannot write " + a.json);
      out << text;
    }
  }
  return a.check && !all_match ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modetab: mode-directed tabling engine"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a query against a program file");
  run_cmd->add_option("file", run.file, "Program file")->required();
  run_cmd->add_option("--query,-q", run.query, "Query goal(s)")->required();
  run_cmd->add_option("--sched", run.sched, "Default strategy: local or batched");
  run_cmd->add_flag("--stats", run.stats, "Print evaluation counters");
  run_cmd->add_option("--trace-events", run.trace, "Write the event log as JSON lines");
  run_cmd->add_option("--max-derivations", run.max_derivations,
                      "Abort after this many resolution steps (0: no limit)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a generated benchmark instance");
  bench_cmd->add_option("name", bench_args.name, "Benchmark name")->required();
  bench_cmd->add_option("--size", bench_args.size, "Instance size")->required();
  bench_cmd->add_option("--seed", bench_args.seed, "Generator seed")->required();
  bench_cmd->add_option("--sched", bench_args.sched, "Strategies to run (repeatable)");
  bench_cmd->add_flag("--check", bench_args.check, "Exit nonzero on an oracle mismatch");
  bench_cmd->add_option("--json", bench_args.json, "Write reports as JSON ('-' for stdout)");

  std::string gen_name;
  std::uint64_t gen_size = 0, gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Print a generated benchmark program and query");
  gen_cmd->add_option("name", gen_name, "Benchmark name")->required();
  gen_cmd->add_option("--size", gen_size, "Instance size")->required();
  gen_cmd->add_option("--seed", gen_seed, "Generator seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*bench_cmd) return cmd_bench(bench_args);
    if (*gen_cmd) {
      auto kind = bench::parse_bench(gen_name);
      if (!kind) throw std::runtime_error("unknown benchmark " + gen_name);
      bench::Instance inst = bench::generate(*kind, gen_size, gen_seed);
      std::cout << bench::program_text(inst) << "% query: " << bench::query_text(inst) << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
