#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "modetab/bench.hpp"

namespace modetab::bench {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

using Matrix = std::vector<std::vector<std::int64_t>>;

const Term* binding(const Solution& s, std::string_view name) {
  for (const auto& [n, t] : s.bindings) {
    if (n == name) return &t;
  }
  return nullptr;
}

bool int_of(const Solution& s, std::string_view name, std::int64_t& out) {
  const Term* t = binding(s, name);
  if (!t || !t->is_int()) return false;
  out = t->as_int();
  return true;
}

Verdict fail(std::string why) { return {false, std::move(why)}; }

std::string pair_name(std::int64_t x, std::int64_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

/// Shortest non-empty path weights; kInf when unreachable.
Matrix floyd_warshall(int n, const std::vector<Edge>& edges) {
  Matrix d(n, std::vector<std::int64_t>(n, kInf));
  for (const Edge& e : edges) d[e.from][e.to] = std::min(d[e.from][e.to], e.weight);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (int j = 0; j < n; ++j) {
        if (d[k][j] != kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

std::size_t reachable_pairs(const Matrix& d) {
  std::size_t n = 0;
  for (const auto& row : d) n += std::count_if(row.begin(), row.end(), [](auto v) { return v != kInf; });
  return n;
}

struct GraphAnswer {
  std::int64_t x, y, c, extra;
};

/// Reads X, Y, C (and `extra_var` when given) from every answer.
bool graph_answers(const std::vector<Solution>& answers, const char* extra_var, int n,
                   std::vector<GraphAnswer>& out, std::string& why) {
  for (const Solution& s : answers) {
    GraphAnswer a{0, 0, 0, 0};
    if (!int_of(s, "X", a.x) || !int_of(s, "Y", a.y) || !int_of(s, "C", a.c) ||
        (extra_var && !int_of(s, extra_var, a.extra))) {
      why = "malformed answer " + s.to_string();
      return false;
    }
    if (a.x < 0 || a.x >= n || a.y < 0 || a.y >= n) {
      why = "unknown node in " + s.to_string();
      return false;
    }
    out.push_back(a);
  }
  return true;
}

Verdict check_shortest(const Instance& inst, const std::vector<Solution>& answers) {
  Matrix d = floyd_warshall(inst.nodes, inst.edges);
  std::vector<GraphAnswer> got;
  std::string why;
  if (!graph_answers(answers, nullptr, inst.nodes, got, why)) return fail(why);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& a : got) {
    if (!seen.insert({a.x, a.y}).second) return fail("two answers for " + pair_name(a.x, a.y));
    if (d[a.x][a.y] != a.c) {
      return fail("distance " + pair_name(a.x, a.y) + " is " + std::to_string(a.c) +
                  ", oracle " + (d[a.x][a.y] == kInf ? "unreachable" : std::to_string(d[a.x][a.y])));
    }
  }
  std::size_t expect = reachable_pairs(d);
  if (got.size() != expect) {
    return fail(std::to_string(got.size()) + " pairs, oracle " + std::to_string(expect));
  }
  return {true, std::to_string(expect) + " pairs"};
}

/// The fourth argument must be a predecessor of Y on some shortest path.
Verdict check_justified(const Instance& inst, const std::vector<Solution>& answers) {
  Verdict base = check_shortest(inst, answers);
  if (!base.match) return base;
  Matrix d = floyd_warshall(inst.nodes, inst.edges);
  std::map<std::pair<int, int>, std::int64_t> weight;
  for (const Edge& e : inst.edges) weight[{e.from, e.to}] = e.weight;
  std::vector<GraphAnswer> got;
  std::string why;
  if (!graph_answers(answers, "J", inst.nodes, got, why)) return fail(why);
  for (const auto& a : got) {
    auto w = weight.find({static_cast<int>(a.extra), static_cast<int>(a.y)});
    bool ok = a.extra >= 0 && a.extra < inst.nodes && w != weight.end() &&
              ((a.extra == a.x && w->second == a.c) ||
               (d[a.x][a.extra] != kInf && d[a.x][a.extra] + w->second == a.c));
    if (!ok) {
      return fail("J=" + std::to_string(a.extra) + " does not justify " + pair_name(a.x, a.y));
    }
  }
  return base;
}

Verdict check_all(const Instance& inst, const std::vector<Solution>& answers) {
  const int n = inst.nodes;
  Matrix d = floyd_warshall(n, inst.edges);
  std::vector<GraphAnswer> got;
  std::string why;
  if (!graph_answers(answers, "N", n, got, why)) return fail(why);

  std::map<std::pair<std::int64_t, std::int64_t>, std::set<std::int64_t>> engine;
  for (const auto& a : got) {
    if (d[a.x][a.y] != a.c) return fail("distance " + pair_name(a.x, a.y) + " is not minimal");
    if (!engine[{a.x, a.y}].insert(a.extra).second) {
      return fail("repeated edge count for " + pair_name(a.x, a.y));
    }
  }

  std::size_t pairs = 0;
  for (int x = 0; x < n; ++x) {
    // shortest paths from x, the empty path included, with edge counts
    std::vector<std::int64_t> d0(n, kInf);
    d0[x] = 0;
    for (int y = 0; y < n; ++y) {
      if (y != x) d0[y] = d[x][y];
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d0[a] < d0[b]; });
    std::vector<std::set<std::int64_t>> counts(n);
    counts[x] = {0};
    auto via = [&](int y, std::int64_t target) {
      std::set<std::int64_t> out;
      for (const Edge& e : inst.edges) {
        if (e.to != y || d0[e.from] == kInf || d0[e.from] + e.weight != target) continue;
        for (std::int64_t k : counts[e.from]) out.insert(k + 1);
      }
      return out;
    };
    for (int y : order) {
      if (y != x && d0[y] != kInf) counts[y] = via(y, d0[y]);
    }
    for (int y = 0; y < n; ++y) {
      if (d[x][y] == kInf) continue;
      ++pairs;
      std::set<std::int64_t> expect = y == x ? via(x, d[x][x]) : counts[y];
      auto it = engine.find({x, y});
      if (it == engine.end() || it->second != expect) {
        return fail("edge counts differ for " + pair_name(x, y));
      }
    }
  }
  if (engine.size() != pairs) return fail("answers for unreachable pairs");
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(got.size()) + " counts"};
}

Verdict check_single(const std::vector<Solution>& answers, const char* var,
                     std::optional<std::int64_t> expect) {
  if (!expect) {
    if (answers.empty()) return {true, "no solution"};
    return fail("answers for an infeasible instance");
  }
  std::int64_t v;
  if (answers.size() != 1 || !int_of(answers.front(), var, v)) {
    return fail(std::to_string(answers.size()) + " answers, expected exactly one");
  }
  std::string want = std::string(var) + "=" + std::to_string(*expect);
  if (v != *expect) return fail(std::string(var) + "=" + std::to_string(v) + ", oracle " + want);
  return {true, want};
}

std::optional<std::int64_t> knapsack_oracle(const Instance& inst) {
  std::vector<std::int64_t> best(inst.target + 1, -1);
  best[0] = 0;
  for (std::int64_t w : inst.weights) {
    for (std::int64_t t = inst.target; t >= w; --t) {
      if (best[t - w] >= 0) best[t] = std::max(best[t], best[t - w] + 1);
    }
  }
  if (best[inst.target] < 0) return std::nullopt;
  return best[inst.target];
}

std::int64_t lcs_oracle(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::int64_t>> t(a.size() + 1, std::vector<std::int64_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t[a.size()][b.size()];
}

std::int64_t matrix_oracle(const std::vector<std::int64_t>& dims) {
  const std::size_t n = dims.size() - 1;
  Matrix m(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 1; i + len - 1 <= n; ++i) {
      std::size_t j = i + len - 1;
      m[i][j] = kInf;
      for (std::size_t k = i; k < j; ++k) {
        m[i][j] = std::min(m[i][j], m[i][k] + m[k + 1][j] + dims[i - 1] * dims[k] * dims[j]);
      }
    }
  }
  return m[1][n];
}

std::vector<double> pagerank_oracle(const Instance& inst) {
  const int n = inst.nodes;
  std::vector<int> outdeg(n, 0);
  for (const Edge& e : inst.edges) ++outdeg[e.from];
  std::vector<double> r(n, 1.0 / n);
  for (int t = 0; t < inst.iterations; ++t) {
    std::vector<double> next(n, (1 - kDamping) / n);
    for (const Edge& e : inst.edges) next[e.to] += kDamping * r[e.from] / outdeg[e.from];
    r = std::move(next);
  }
  return r;
}

Verdict check_pagerank(const Instance& inst, const std::vector<Solution>& answers) {
  constexpr double kTolerance = 1e-9;
  std::vector<double> expect = pagerank_oracle(inst);
  std::vector<bool> seen(inst.nodes, false);
  double worst = 0;
  for (const Solution& s : answers) {
    std::int64_t p;
    const Term* r = binding(s, "R");
    if (!int_of(s, "P", p) || !r || !r->is_number() || p < 0 || p >= inst.nodes) {
      return fail("malformed answer " + s.to_string());
    }
    if (seen[p]) return fail("two ranks for page " + std::to_string(p));
    seen[p] = true;
    double v = r->is_int() ? static_cast<double>(r->as_int()) : r->as_float();
    double err = std::abs(v - expect[p]);
    worst = std::max(worst, err);
    if (!(err <= kTolerance)) {
      return fail("rank of page " + std::to_string(p) + " off by " + std::to_string(err));
    }
  }
  if (answers.size() != static_cast<std::size_t>(inst.nodes)) {
    return fail(std::to_string(answers.size()) + " ranks for " + std::to_string(inst.nodes) +
                " pages");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d ranks, max error %.3g", inst.nodes, worst);
  return {true, buf};
}

}  // namespace

Verdict check(const Instance& inst, const std::vector<Solution>& answers) {
  switch (inst.kind) {
    case Benchmark::Shortest: return check_shortest(inst, answers);
    case Benchmark::ShortestFirst:
    case Benchmark::ShortestPref: return check_justified(inst, answers);
    case Benchmark::ShortestAll: return check_all(inst, answers);
    case Benchmark::Knapsack: return check_single(answers, "C", knapsack_oracle(inst));
    case Benchmark::Lcs: return check_single(answers, "L", lcs_oracle(inst.seq_a, inst.seq_b));
    case Benchmark::Matrix: return check_single(answers, "C", matrix_oracle(inst.dims));
    case Benchmark::Pagerank: return check_pagerank(inst, answers);
  }
  return fail("unknown benchmark");
}

}  // namespace modetab::bench
