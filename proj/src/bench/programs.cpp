#include <map>

#include "modetab/bench.hpp"

namespace modetab::bench {

namespace {

const char* kShortest = R"(:- table path(index, index, min).
path(X, Y, C) :- edge(X, Y, C).
path(X, Y, C) :- path(X, Z, C1), edge(Z, Y, C2), C is C1 + C2.
)";

// the fourth argument is the node preceding Y on the path
const char* kShortestFirst = R"(:- table path(index, index, min, first).
path(X, Y, C, X) :- edge(X, Y, C).
path(X, Y, C, Z) :- path(X, Z, C1, _), edge(Z, Y, C2), C is C1 + C2.
)";

// the fourth argument counts edges
const char* kShortestAll = R"(:- table path(index, index, min, all).
path(X, Y, C, 1) :- edge(X, Y, C).
path(X, Y, C, N) :- path(X, Z, C1, N1), edge(Z, Y, C2), C is C1 + C2, N is N1 + 1.
)";

// the most recently preferred predecessor among equally short paths
const char* kShortestPref = R"(:- table path(index, index, min, last).
path(X, Y, C, X) :- edge(X, Y, C).
path(X, Y, C, Z) :- path(X, Z, C1, _), edge(Z, Y, C2), C is C1 + C2.
)";

const char* kKnapsack = R"(:- table ks(index, index, max).
ks(0, 0, 0).
ks(I, W, C) :- I > 0, I1 is I - 1, ks(I1, W, C).
ks(I, W, C) :- I > 0, item(I, Wi), W >= Wi, I1 is I - 1, W1 is W - Wi,
    ks(I1, W1, C1), C is C1 + 1.
)";

const char* kLcs = R"(:- table lcs(index, index, max).
lcs(0, _, 0).
lcs(I, 0, 0) :- I > 0.
lcs(I, J, L) :- I > 0, J > 0, a(I, X), b(J, X), I1 is I - 1, J1 is J - 1,
    lcs(I1, J1, L1), L is L1 + 1.
lcs(I, J, L) :- I > 0, J > 0, I1 is I - 1, lcs(I1, J, L).
lcs(I, J, L) :- I > 0, J > 0, J1 is J - 1, lcs(I, J1, L).
)";

const char* kMatrix = R"(:- table mc(index, index, min).
mc(I, I, 0).
mc(I, J, C) :- I < J, split(I, J, K), mc(I, K, C1), K1 is K + 1, mc(K1, J, C2),
    I0 is I - 1, d(I0, A), d(K, B), d(J, E), C is C1 + C2 + A * B * E.

split(I, J, I) :- I < J.
split(I, J, K) :- I1 is I + 1, I1 < J, split(I1, J, K).
)";

const char* kPagerank = R"(:- table rank(index, index, sum).
rank(0, P, R) :- page(P), pages(N), R is 1 / N.
rank(T, P, R) :- T > 0, page(P), pages(N), R is (1 - 0.85) / N.
rank(T, P, R) :- T > 0, T1 is T - 1, inlink(P, Q), outdeg(Q, D),
    rank(T1, Q, RQ), R is 0.85 * RQ / D.
)";

std::string fact(const std::string& name, std::initializer_list<std::string> args) {
  std::string out = name + "(";
  bool first = true;
  for (const auto& a : args) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  return out + ").\n";
}

std::string num(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::string rules_text(Benchmark b) {
  switch (b) {
    case Benchmark::Shortest: return kShortest;
    case Benchmark::ShortestFirst: return kShortestFirst;
    case Benchmark::ShortestAll: return kShortestAll;
    case Benchmark::ShortestPref: return kShortestPref;
    case Benchmark::Knapsack: return kKnapsack;
    case Benchmark::Lcs: return kLcs;
    case Benchmark::Matrix: return kMatrix;
    case Benchmark::Pagerank: return kPagerank;
  }
  return {};
}

std::string program_text(const Instance& inst) {
  std::string out = rules_text(inst.kind) + "\n";
  switch (inst.kind) {
    case Benchmark::Shortest:
    case Benchmark::ShortestFirst:
    case Benchmark::ShortestAll:
    case Benchmark::ShortestPref:
      for (const Edge& e : inst.edges) out += fact("edge", {num(e.from), num(e.to), num(e.weight)});
      break;
    case Benchmark::Knapsack:
      for (std::size_t i = 0; i < inst.weights.size(); ++i) {
        out += fact("item", {num(i + 1), num(inst.weights[i])});
      }
      break;
    case Benchmark::Lcs:
      for (std::size_t i = 0; i < inst.seq_a.size(); ++i) {
        out += fact("a", {num(i + 1), std::string(1, inst.seq_a[i])});
      }
      for (std::size_t i = 0; i < inst.seq_b.size(); ++i) {
        out += fact("b", {num(i + 1), std::string(1, inst.seq_b[i])});
      }
      break;
    case Benchmark::Matrix:
      for (std::size_t i = 0; i < inst.dims.size(); ++i) out += fact("d", {num(i), num(inst.dims[i])});
      break;
    case Benchmark::Pagerank: {
      out += fact("pages", {num(inst.nodes)});
      std::map<int, int> outdeg;
      for (int p = 0; p < inst.nodes; ++p) out += fact("page", {num(p)});
      for (const Edge& e : inst.edges) {
        out += fact("inlink", {num(e.to), num(e.from)});
        ++outdeg[e.from];
      }
      for (const auto& [q, d] : outdeg) out += fact("outdeg", {num(q), num(d)});
      break;
    }
  }
  return out;
}

std::string query_text(const Instance& inst) {
  switch (inst.kind) {
    case Benchmark::Shortest: return "path(X, Y, C)";
    case Benchmark::ShortestFirst:
    case Benchmark::ShortestPref: return "path(X, Y, C, J)";
    case Benchmark::ShortestAll: return "path(X, Y, C, N)";
    case Benchmark::Knapsack:
      return "ks(" + num(inst.weights.size()) + ", " + num(inst.target) + ", C)";
    case Benchmark::Lcs:
      return "lcs(" + num(inst.seq_a.size()) + ", " + num(inst.seq_b.size()) + ", L)";
    case Benchmark::Matrix: return "mc(1, " + num(inst.dims.size() - 1) + ", C)";
    case Benchmark::Pagerank: return "rank(" + num(inst.iterations) + ", P, R)";
  }
  return {};
}

}  // namespace modetab::bench
