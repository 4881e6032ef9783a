#include <gtest/gtest.h>

#include <json.hpp>

#include "bench_check.hpp"
#include "graph_oracles.hpp"
#include "modetab/engine.hpp"
#include "modetab/program.hpp"

using namespace modetab;
using namespace modetab::bench;

namespace {

std::vector<Solution> solve_instance(const Instance& inst, Strategy s) {
  EngineOptions opt;
  opt.strategy = s;
  return solve(parse_program(program_text(inst)), query_text(inst), opt).solutions;
}

std::uint64_t small_size(Benchmark b) {
  switch (b) {
    case Benchmark::Knapsack: return 12;
    case Benchmark::Lcs: return 15;
    case Benchmark::Matrix: return 10;
    case Benchmark::Pagerank: return 5;
    default: return 12;
  }
}

}  // namespace

TEST(Generate, IsDeterministic) {
  for (Benchmark b : all_benchmarks()) {
    EXPECT_EQ(program_text(generate(b, small_size(b), 9)), program_text(generate(b, small_size(b), 9)));
    EXPECT_NE(program_text(generate(b, small_size(b), 9)), program_text(generate(b, small_size(b), 10)))
        << bench_name(b);
  }
}

TEST(Generate, Shapes) {
  EXPECT_EQ(generate(Benchmark::Matrix, 3, 7).dims.size(), 4u);
  Instance g = generate(Benchmark::Shortest, 30, 1);
  EXPECT_EQ(g.nodes, 30);
  for (int i = 0; i < 30; ++i) {
    bool cycle_edge = false;
    for (const Edge& e : g.edges) {
      EXPECT_NE(e.from, e.to);
      EXPECT_GE(e.weight, 1);
      EXPECT_LE(e.weight, 100);
      cycle_edge |= e.from == i && e.to == (i + 1) % 30;
    }
    EXPECT_TRUE(cycle_edge) << i;
  }
  Instance k = generate(Benchmark::Knapsack, 20, 2);
  EXPECT_EQ(k.weights.size(), 20u);
  EXPECT_GE(testsupport::knapsack_best(k.weights, k.target), 1);
  Instance l = generate(Benchmark::Lcs, 40, 3);
  EXPECT_EQ(l.seq_a.size(), 40u);
  EXPECT_EQ(l.seq_b.size(), 40u);
  Instance p = generate(Benchmark::Pagerank, 7, 4);
  EXPECT_EQ(p.nodes, kPagerankPages);
  EXPECT_EQ(p.iterations, 7);
  EXPECT_THROW(generate(Benchmark::Shortest, 1, 0), std::out_of_range);
  EXPECT_THROW(generate(Benchmark::Lcs, 5000, 0), std::out_of_range);
}

TEST(Generate, NamesRoundTrip) {
  for (Benchmark b : all_benchmarks()) EXPECT_EQ(parse_bench(bench_name(b)), b);
  EXPECT_EQ(all_benchmarks().size(), 8u);
  EXPECT_EQ(parse_bench("fib"), std::nullopt);
}

TEST(Oracles, KnownValues) {
  EXPECT_EQ(testsupport::lcs_length("abcbdab", "bdcaba"), 4);
  EXPECT_EQ(testsupport::matrix_chain_cost({10, 30, 5, 60}), 4500);
  EXPECT_EQ(testsupport::knapsack_best({2, 3, 5}, 5), 2);
  EXPECT_EQ(testsupport::knapsack_best({4}, 3), -1);
  std::vector<Edge> tri{{0, 1, 1}, {1, 2, 1}, {0, 2, 5}, {2, 0, 1}};
  auto d = testsupport::nonempty_distances(3, tri);
  EXPECT_EQ(d[0][2], 2);
  EXPECT_EQ(d[0][0], 3);
  auto c = testsupport::minimal_edge_counts(3, tri);
  EXPECT_EQ(c[0][2], (std::set<std::int64_t>{2}));
}

TEST(Oracles, EngineMatchesOnKnownLcsAndMatrix) {
  Instance l;
  l.kind = Benchmark::Lcs;
  l.seq_a = "abcbdab";
  l.seq_b = "bdcaba";
  auto sols = solve_instance(l, Strategy::Local);
  EXPECT_TRUE(testsupport::check_answers(l, sols).ok);
  Instance m;
  m.kind = Benchmark::Matrix;
  m.dims = {10, 30, 5, 60};
  sols = solve_instance(m, Strategy::Local);
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].to_string(), "C=4500");
}

TEST(Bench, EveryBenchmarkMatchesBothOracles) {
  for (Benchmark b : all_benchmarks()) {
    for (std::uint64_t seed : {1, 2, 3}) {
      Instance inst = generate(b, small_size(b), seed);
      for (Strategy s : {Strategy::Local, Strategy::Batched}) {
        // sums over sums: batched consumers fold in partial totals
        if (b == Benchmark::Pagerank && s == Strategy::Batched) continue;
        auto sols = solve_instance(inst, s);
        auto mine = testsupport::check_answers(inst, sols);
        EXPECT_TRUE(mine.ok) << bench_name(b) << " seed " << seed << " " << strategy_name(s) << ": "
                             << mine.detail;
        EXPECT_TRUE(check(inst, sols).match) << bench_name(b) << " library oracle";
      }
    }
  }
}

TEST(Bench, ModeDeclarations) {
  auto modes_of = [](Benchmark b) {
    Program p = parse_program(rules_text(b));
    return *p.tables.at(0).modes;
  };
  using M = std::vector<Mode>;
  EXPECT_EQ(modes_of(Benchmark::Shortest), (M{Mode::Index, Mode::Index, Mode::Min}));
  EXPECT_EQ(modes_of(Benchmark::ShortestFirst), (M{Mode::Index, Mode::Index, Mode::Min, Mode::First}));
  EXPECT_EQ(modes_of(Benchmark::ShortestAll), (M{Mode::Index, Mode::Index, Mode::Min, Mode::All}));
  EXPECT_EQ(modes_of(Benchmark::ShortestPref), (M{Mode::Index, Mode::Index, Mode::Min, Mode::Last}));
  EXPECT_EQ(modes_of(Benchmark::Knapsack), (M{Mode::Index, Mode::Index, Mode::Max}));
  EXPECT_EQ(modes_of(Benchmark::Lcs), (M{Mode::Index, Mode::Index, Mode::Max}));
  EXPECT_EQ(modes_of(Benchmark::Matrix), (M{Mode::Index, Mode::Index, Mode::Min}));
  EXPECT_EQ(modes_of(Benchmark::Pagerank), (M{Mode::Index, Mode::Index, Mode::Sum}));
}

TEST(Bench, ReportJson) {
  Instance inst = generate(Benchmark::Shortest, 10, 1);
  auto r = run_bench(inst, Strategy::Local);
  EXPECT_TRUE(r.match);
  auto j = nlohmann::json::parse(reports_json({r}));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["instance"]["name"], "shortest");
  EXPECT_EQ(j[0]["instance"]["size"], 10);
  EXPECT_EQ(j[0]["strategy"], "local");
  EXPECT_EQ(j[0]["ms"].size(), 3u);
  EXPECT_TRUE(j[0]["stats"].contains("insertions"));
  EXPECT_TRUE(j[0]["match"].get<bool>());
}
