#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modetab/engine.hpp"

namespace modetab::bench {

enum class Benchmark {
  Shortest,
  ShortestFirst,
  ShortestAll,
  ShortestPref,
  Knapsack,
  Lcs,
  Matrix,
  Pagerank,
};

std::string_view bench_name(Benchmark b);
std::optional<Benchmark> parse_bench(std::string_view name);
const std::vector<Benchmark>& all_benchmarks();

/// Inclusive bounds for the size parameter.
struct SizeBounds {
  std::uint64_t min;
  std::uint64_t max;
};
SizeBounds size_bounds(Benchmark b);

struct Edge {
  int from;
  int to;
  std::int64_t weight;
};

/// A generated benchmark input. Only the fields of its kind are set.
struct Instance {
  Benchmark kind = Benchmark::Shortest;
  std::uint64_t size = 0;
  std::uint64_t seed = 0;

  int nodes = 0;                     // graphs and pagerank pages
  std::vector<Edge> edges;           // graphs; pagerank links (weight 0)
  std::vector<std::int64_t> weights; // knapsack item weights, item i at i-1
  std::int64_t target = 0;           // knapsack total weight
  std::string seq_a, seq_b;          // lcs
  std::vector<std::int64_t> dims;    // matrix i is dims[i-1] x dims[i]
  int iterations = 0;                // pagerank
};

/// Pages in every pagerank instance.
constexpr int kPagerankPages = 50;
constexpr double kDamping = 0.85;

/// Deterministic in (kind, size, seed). Throws std::out_of_range when
/// size is outside size_bounds(kind).
Instance generate(Benchmark kind, std::uint64_t size, std::uint64_t seed);

/// Weighted digraph on `n` nodes: a Hamiltonian cycle plus random extra
/// edges for out-degree about 4, weights 1..100.
std::vector<Edge> random_graph(int n, std::uint64_t seed);

/// The tabled rules of a benchmark, without facts.
std::string rules_text(Benchmark b);
/// Rules plus the instance's facts.
std::string program_text(const Instance& inst);
std::string query_text(const Instance& inst);

struct Verdict {
  bool match = false;
  std::string detail;  // first mismatch, or a summary of the oracle result
};

/// Compares engine answers for query_text(inst) against an independent
/// dynamic-programming oracle.
Verdict check(const Instance& inst, const std::vector<Solution>& answers);

struct BenchReport {
  Benchmark kind = Benchmark::Shortest;
  std::uint64_t size = 0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Local;
  std::size_t answers = 0;
  bool match = false;
  std::string detail;
  std::array<double, 3> ms{};
  Stats stats;
};

/// Solves the instance three times under `strategy` and checks the
/// answers of the first run.
BenchReport run_bench(const Instance& inst, Strategy strategy);

/// JSON array of reports.
std::string reports_json(const std::vector<BenchReport>& reports);

}  // namespace modetab::bench
