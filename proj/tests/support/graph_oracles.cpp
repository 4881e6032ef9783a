#include "graph_oracles.hpp"

#include <algorithm>
#include <functional>

namespace testsupport {

using modetab::bench::Edge;

std::vector<std::vector<std::int64_t>> nonempty_distances(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, kUnreached));
  for (int x = 0; x < n; ++x) {
    auto& d = dist[x];
    for (const Edge& e : edges) {
      if (e.from == x) d[e.to] = std::min(d[e.to], e.weight);
    }
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (const Edge& e : edges) {
        if (d[e.from] != kUnreached && d[e.from] + e.weight < d[e.to]) {
          d[e.to] = d[e.from] + e.weight;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }
  return dist;
}

std::vector<std::vector<std::set<std::int64_t>>> minimal_edge_counts(int n,
                                                                     const std::vector<Edge>& edges) {
  auto dist = nonempty_distances(n, edges);
  std::vector<std::vector<std::set<std::int64_t>>> counts(n, std::vector<std::set<std::int64_t>>(n));
  for (int x = 0; x < n; ++x) {
    // layer[y]: cheapest walk from x to y with exactly k edges
    std::vector<std::int64_t> layer(n, kUnreached);
    layer[x] = 0;
    for (int k = 1; k <= n; ++k) {
      std::vector<std::int64_t> next(n, kUnreached);
      for (const Edge& e : edges) {
        if (layer[e.from] != kUnreached) next[e.to] = std::min(next[e.to], layer[e.from] + e.weight);
      }
      for (int y = 0; y < n; ++y) {
        if (next[y] != kUnreached && next[y] == dist[x][y]) counts[x][y].insert(k);
      }
      layer = std::move(next);
    }
  }
  return counts;
}

std::int64_t knapsack_best(const std::vector<std::int64_t>& weights, std::int64_t target) {
  std::map<std::pair<std::size_t, std::int64_t>, std::int64_t> memo;
  std::function<std::int64_t(std::size_t, std::int64_t)> best = [&](std::size_t i,
                                                                    std::int64_t w) -> std::int64_t {
    if (i == 0) return w == 0 ? 0 : -1;
    auto [it, fresh] = memo.try_emplace({i, w}, -1);
    if (!fresh) return it->second;
    std::int64_t r = best(i - 1, w);
    if (weights[i - 1] <= w) {
      std::int64_t take = best(i - 1, w - weights[i - 1]);
      if (take >= 0) r = std::max(r, take + 1);
    }
    memo[{i, w}] = r;
    return r;
  };
  return best(weights.size(), target);
}

std::int64_t lcs_length(const std::string& a, const std::string& b) {
  std::vector<std::int64_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (char ca : a) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = ca == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::int64_t matrix_chain_cost(const std::vector<std::int64_t>& dims) {
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> memo;
  std::function<std::int64_t(std::size_t, std::size_t)> cost = [&](std::size_t i, std::size_t j) {
    if (i == j) return std::int64_t{0};
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    std::int64_t best = kUnreached;
    for (std::size_t k = i; k < j; ++k) {
      best = std::min(best, cost(i, k) + cost(k + 1, j) + dims[i - 1] * dims[k] * dims[j]);
    }
    memo[{i, j}] = best;
    return best;
  };
  return cost(1, dims.size() - 1);
}

std::vector<double> pagerank(int n, const std::vector<Edge>& links, int iterations, double damping) {
  std::vector<int> outdeg(n, 0);
  std::vector<std::vector<int>> incoming(n);
  for (const Edge& e : links) {
    ++outdeg[e.from];
    incoming[e.to].push_back(e.from);
  }
  std::vector<double> r(n, 1.0 / n);
  for (int t = 0; t < iterations; ++t) {
    std::vector<double> next(n);
    for (int p = 0; p < n; ++p) {
      double acc = 0;
      for (int q : incoming[p]) acc += r[q] / outdeg[q];
      next[p] = (1 - damping) / n + damping * acc;
    }
    r = std::move(next);
  }
  return r;
}

}  // namespace testsupport
