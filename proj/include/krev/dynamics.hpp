#pragma once

#include "krev/configuration.hpp"
#include "krev/graph.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace krev {

/// op_i: number of neighbours of v_i whose state differs from v_i's.
using OpCounts = std::vector<int>;

namespace detail {

inline void require_match(const Graph &g, const Configuration &x) {
  if (g.n() != x.n())
    throw std::invalid_argument("configuration length " + std::to_string(x.n()) +
                                " does not match graph order " + std::to_string(g.n()));
}

inline void require_k(int k) {
  if (k < 1)
    throw std::invalid_argument("k must be a positive integer");
}

inline int disagreeing_neighbors(const Graph &g, const Configuration &x, Vertex i) {
  const Word own = x.bit(i) ? ~Word{0} : Word{0};
  const auto row = g.row(i);
  const auto bits = x.words();
  int count = 0;
  for (std::size_t w = 0; w < row.size(); ++w)
    count += std::popcount(row[w] & (bits[w] ^ own));
  return count;
}

} // namespace detail

inline OpCounts op_counts(const Graph &g, const Configuration &x) {
  detail::require_match(g, x);
  OpCounts op(g.n());
  for (Vertex i = 0; i < g.n(); ++i)
    op[i] = detail::disagreeing_neighbors(g, x, i);
  return op;
}

/// One synchronous update: every vertex with at least k disagreeing neighbours flips.
inline Configuration step(const Graph &g, const Configuration &x, int k) {
  detail::require_k(k);
  detail::require_match(g, x);
  Configuration next = x;
  for (Vertex i = 0; i < g.n(); ++i)
    if (detail::disagreeing_neighbors(g, x, i) >= k)
      next.flip(i);
  return next;
}

} // namespace krev
