#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "modetab/bench.hpp"

namespace modetab::bench {

namespace {

struct NamedBench {
  Benchmark kind;
  std::string_view name;
  SizeBounds bounds;
};

const NamedBench kBenches[] = {
    {Benchmark::Shortest, "shortest", {2, 500}},
    {Benchmark::ShortestFirst, "shortest_first", {2, 500}},
    {Benchmark::ShortestAll, "shortest_all", {2, 500}},
    {Benchmark::ShortestPref, "shortest_pref", {2, 500}},
    {Benchmark::Knapsack, "knapsack", {1, 200}},
    {Benchmark::Lcs, "lcs", {1, 2000}},
    {Benchmark::Matrix, "matrix", {1, 200}},
    {Benchmark::Pagerank, "pagerank", {1, 100}},
};

const NamedBench& entry(Benchmark b) {
  for (const auto& e : kBenches) {
    if (e.kind == b) return e;
  }
  throw std::logic_error("unknown benchmark");
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::string random_sequence(std::mt19937_64& rng, std::size_t n) {
  static constexpr char alphabet[] = "abcd";
  std::string s(n, 'a');
  for (char& c : s) c = alphabet[uniform(rng, 0, 3)];
  return s;
}

}  // namespace

std::string_view bench_name(Benchmark b) { return entry(b).name; }

std::optional<Benchmark> parse_bench(std::string_view name) {
  for (const auto& e : kBenches) {
    if (e.name == name) return e.kind;
  }
  return std::nullopt;
}

const std::vector<Benchmark>& all_benchmarks() {
  static const std::vector<Benchmark> all = [] {
    std::vector<Benchmark> v;
    for (const auto& e : kBenches) v.push_back(e.kind);
    return v;
  }();
  return all;
}

SizeBounds size_bounds(Benchmark b) { return entry(b).bounds; }

std::vector<Edge> random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  const int extra = std::min(3, n - 2);
  for (int i = 0; i < n; ++i) {
    std::set<int> targets = {(i + 1) % n};
    while (static_cast<int>(targets.size()) < 1 + extra) {
      int t = static_cast<int>(uniform(rng, 0, n - 1));
      if (t != i) targets.insert(t);
    }
    for (int t : targets) edges.push_back({i, t, uniform(rng, 1, 100)});
  }
  return edges;
}

Instance generate(Benchmark kind, std::uint64_t size, std::uint64_t seed) {
  SizeBounds bounds = size_bounds(kind);
  if (size < bounds.min || size > bounds.max) {
    throw std::out_of_range(std::string(bench_name(kind)) + " size must be in " +
                            std::to_string(bounds.min) + ".." + std::to_string(bounds.max));
  }
  Instance inst;
  inst.kind = kind;
  inst.size = size;
  inst.seed = seed;
  std::mt19937_64 rng(seed);
  switch (kind) {
    case Benchmark::Shortest:
    case Benchmark::ShortestFirst:
    case Benchmark::ShortestAll:
    case Benchmark::ShortestPref:
      inst.nodes = static_cast<int>(size);
      inst.edges = random_graph(inst.nodes, seed);
      break;
    case Benchmark::Knapsack:
      for (std::uint64_t i = 0; i < size; ++i) {
        inst.weights.push_back(uniform(rng, 1, 50));
        if (uniform(rng, 0, 1)) inst.target += inst.weights.back();
      }
      break;
    case Benchmark::Lcs:
      inst.seq_a = random_sequence(rng, size);
      inst.seq_b = random_sequence(rng, size);
      break;
    case Benchmark::Matrix:
      for (std::uint64_t i = 0; i <= size; ++i) inst.dims.push_back(uniform(rng, 5, 100));
      break;
    case Benchmark::Pagerank:
      inst.nodes = kPagerankPages;
      inst.iterations = static_cast<int>(size);
      for (Edge e : random_graph(kPagerankPages, seed)) inst.edges.push_back({e.from, e.to, 0});
      break;
  }
  return inst;
}

}  // namespace modetab::bench
