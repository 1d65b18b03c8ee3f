#pragma once

#include "krev/canonical.hpp"
#include "krev/graph.hpp"

#include <map>
#include <vector>

namespace krev {

/// Labeled tree encoded by a Prüfer sequence over 0..n-1 (length n-2).
inline Graph tree_from_prufer(int n, const std::vector<int> &seq) {
  if (n < 2 || static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("Prüfer sequence length must be n-2");
  std::vector<int> degree(n, 1);
  for (int s : seq) {
    if (s < 0 || s >= n)
      throw std::invalid_argument("Prüfer entry out of range");
    ++degree[s];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int s : seq) {
    int leaf = 0;
    while (degree[leaf] != 1)
      ++leaf;
    edges.emplace_back(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1)
      last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return Graph(n, std::move(edges));
}

/**
 * Test oracle for the free-tree enumerator: decodes all n^(n-2) Prüfer
 * sequences and keeps one labeled tree per canonical code, ordered by
 * code. Only meant for 2 <= n <= 9.
 */
inline std::vector<Graph> prufer_oracle_trees(int n) {
  if (n < 2 || n > 9)
    throw std::invalid_argument("prufer_oracle_trees supports 2 <= n <= 9");
  std::map<CanonicalCode, Graph> classes;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    Graph t = tree_from_prufer(n, seq);
    auto code = canonical_code(t);
    classes.try_emplace(std::move(code), std::move(t));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n)
      seq[i++] = 0;
    if (i == n - 2)
      break;
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto &[code, t] : classes)
    out.push_back(std::move(t));
  return out;
}

} // namespace krev
