#pragma once

// Generators and slow reference implementations shared by the test suites.
// Nothing here goes through the popcount paths of the library.

#include "krev/krev.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace krev::test {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

/// Builds a graph from 1-based edges.
inline Graph graph1(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.emplace_back(u - 1, v - 1);
  return Graph(n, e);
}

/// First tree of the eight-vertex extremal family: path 1..7 plus edge 6-8.
inline Graph family8_t1() { return graph1(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}}); }
inline Graph family8_t2() { return graph1(8, {{1, 2}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}}); }

inline Graph random_tree(int n, std::mt19937_64 &rng) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v)
    e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph(n, e), perm);
}

/// Random spanning tree plus extra edges with probability p.
inline Graph random_connected_graph(int n, double p, std::mt19937_64 &rng) {
  auto t = random_tree(n, rng);
  std::vector<Edge> e(t.edges().begin(), t.edges().end());
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!t.adjacent(u, v) && coin(rng))
        e.emplace_back(u, v);
  return Graph(n, e);
}

inline Configuration random_config(int n, std::mt19937_64 &rng) {
  std::vector<int> s(n);
  std::bernoulli_distribution coin(0.5);
  for (auto &v : s) v = coin(rng) ? 1 : -1;
  return Configuration::from_states(s);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64 &rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Configuration after relabeling: state of v moves to perm[v].
inline Configuration permute(const Configuration &x, const std::vector<Vertex> &perm) {
  Configuration out(x.n());
  for (int v = 0; v < x.n(); ++v) out.set(perm[v], x.state(v));
  return out;
}

// --- reference implementations, straight from the definitions ----------

inline std::vector<int> naive_op(const Graph &g, const std::vector<int> &x) {
  std::vector<int> op(g.n(), 0);
  for (auto [u, v] : g.edges())
    if (x[u] != x[v]) {
      ++op[u];
      ++op[v];
    }
  return op;
}

inline std::vector<int> naive_step(const Graph &g, const std::vector<int> &x, int k) {
  auto op = naive_op(g, x);
  auto y = x;
  for (int i = 0; i < g.n(); ++i)
    if (op[i] >= k) y[i] = -y[i];
  return y;
}

inline long long naive_energy(const Graph &g, const std::vector<int> &x, int k) {
  auto op = naive_op(g, x);
  long long e = 0;
  for (int i = 0; i < g.n(); ++i) e += op[i] >= k ? op[i] - k : k - op[i];
  return e;
}

/// tau and period by comparing against every earlier configuration.
inline std::pair<int, int> naive_tau_period(const Graph &g, std::vector<int> x, int k) {
  std::vector<std::vector<int>> hist;
  while (true) {
    for (std::size_t t0 = 0; t0 < hist.size(); ++t0)
      if (hist[t0] == x)
        return {static_cast<int>(t0), static_cast<int>(hist.size() - t0)};
    hist.push_back(x);
    x = naive_step(g, x, k);
  }
}

inline bool brute_force_isomorphic(const Graph &a, const Graph &b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<Vertex> perm(a.n());
  std::iota(perm.begin(), perm.end(), 0);
  const auto target = b.sorted_edges();
  do {
    if (relabel(a, perm).sorted_edges() == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace krev::test
