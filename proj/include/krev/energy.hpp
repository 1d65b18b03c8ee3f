#pragma once

#include "krev/dynamics.hpp"
#include "krev/error.hpp"
#include "krev/graph.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace krev {

using Energy = std::int64_t;

/// S1 = vertices about to flip (op >= k), S2 = the rest. Both sorted.
struct Partition {
  std::vector<Vertex> s1;
  std::vector<Vertex> s2;
};

inline Partition partition_from_ops(const OpCounts &op, int k) {
  Partition p;
  for (Vertex i = 0; i < static_cast<Vertex>(op.size()); ++i)
    (op[i] >= k ? p.s1 : p.s2).push_back(i);
  return p;
}

inline Partition partition(const Graph &g, const Configuration &x, int k) {
  detail::require_k(k);
  return partition_from_ops(op_counts(g, x), k);
}

namespace detail {

// Sum over S1 of (op - k) plus sum over S2 of (k - op), where membership
// comes from `membership_ops` and the summed values from `value_ops`.
inline Energy energy_sum(const OpCounts &membership_ops, const OpCounts &value_ops, int k) {
  Energy e = 0;
  for (std::size_t i = 0; i < membership_ops.size(); ++i) {
    if (membership_ops[i] >= k)
      e += value_ops[i] - k;
    else
      e += k - value_ops[i];
  }
  return e;
}

} // namespace detail

/// E(t) for the configuration x.
inline Energy energy(const Graph &g, const Configuration &x, int k) {
  detail::require_k(k);
  const auto op = op_counts(g, x);
  return detail::energy_sum(op, op, k);
}

/// E'(t): partition taken at x, disagreement counts taken after one step.
inline Energy energy_aux(const Graph &g, const Configuration &x, int k) {
  detail::require_k(k);
  const auto now = op_counts(g, x);
  const auto next = op_counts(g, step(g, x, k));
  return detail::energy_sum(now, next, k);
}

/// Sizes of the discordant edge sets: A inside S1, B inside S2, C across.
struct EdgePartition {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const EdgePartition &, const EdgePartition &) = default;
};

/**
 * Classifies every discordant edge and checks the counting identities
 * sum_{S1} op = 2|A| + |C| and sum_{S2} op = 2|B| + |C|. A failed
 * identity throws InvariantViolation.
 */
inline EdgePartition edge_partition(const Graph &g, const Configuration &x, int k) {
  detail::require_k(k);
  const auto op = op_counts(g, x);
  EdgePartition out;
  for (auto [u, v] : g.edges()) {
    if (x.bit(u) == x.bit(v))
      continue;
    const bool u1 = op[u] >= k, v1 = op[v] >= k;
    if (u1 && v1)
      ++out.a;
    else if (!u1 && !v1)
      ++out.b;
    else
      ++out.c;
  }
  long long sum1 = 0, sum2 = 0;
  for (Vertex i = 0; i < g.n(); ++i)
    (op[i] >= k ? sum1 : sum2) += op[i];
  if (sum1 != 2LL * out.a + out.c || sum2 != 2LL * out.b + out.c)
    throw InvariantViolation("edge partition identity failed");
  return out;
}

struct EnergyBreakdown {
  int k = 0;
  OpCounts op_now;
  OpCounts op_next;
  Partition now;
  Energy energy = 0;      // E(t)
  Energy energy_aux = 0;  // E'(t)
  Energy energy_next = 0; // E(t+1)
  EdgePartition edges;
  std::vector<Energy> per_vertex_delta;
};

/**
 * Per-vertex contributions to E(t+1) - E(t):
 *
 *   stays in S1 or stays in S2   ->  0
 *   S1 -> S2                     ->  2(k - op_i(t+1))
 *   S2 -> S1                     ->  2(op_i(t+1) - k)
 *
 * Throws InvariantViolation if the contributions do not add up to the
 * direct energy difference or if any of them is negative.
 */
inline EnergyBreakdown delta_energy_breakdown(const Graph &g, const Configuration &x, int k) {
  detail::require_k(k);
  EnergyBreakdown b;
  b.k = k;
  b.op_now = op_counts(g, x);
  b.op_next = op_counts(g, step(g, x, k));
  b.now = partition_from_ops(b.op_now, k);
  b.energy = detail::energy_sum(b.op_now, b.op_now, k);
  b.energy_aux = detail::energy_sum(b.op_now, b.op_next, k);
  b.energy_next = detail::energy_sum(b.op_next, b.op_next, k);
  b.edges = edge_partition(g, x, k);
  b.per_vertex_delta.resize(g.n(), 0);
  Energy total = 0;
  for (Vertex i = 0; i < g.n(); ++i) {
    const bool was_s1 = b.op_now[i] >= k;
    const bool is_s1 = b.op_next[i] >= k;
    Energy d = 0;
    if (was_s1 && !is_s1)
      d = 2 * (k - b.op_next[i]);
    else if (!was_s1 && is_s1)
      d = 2 * (b.op_next[i] - k);
    if (d < 0)
      throw InvariantViolation("negative energy contribution at vertex " + std::to_string(i + 1));
    b.per_vertex_delta[i] = d;
    total += d;
  }
  if (total != b.energy_next - b.energy_aux)
    throw InvariantViolation("per-vertex energy contributions do not sum to E(t+1) - E'(t)");
  return b;
}

namespace detail {

inline std::vector<int> one_based(const std::vector<Vertex> &vs) {
  std::vector<int> out(vs.begin(), vs.end());
  for (auto &v : out) ++v;
  return out;
}

} // namespace detail

/// Field names: k, op_now, op_next, s1, s2 (1-based), E, E_aux, E_next,
/// a_size, b_size, c_size, per_vertex_delta, delta_E.
inline void to_json(nlohmann::json &j, const EnergyBreakdown &b) {
  j = nlohmann::json{
      {"k", b.k},
      {"op_now", b.op_now},
      {"op_next", b.op_next},
      {"s1", detail::one_based(b.now.s1)},
      {"s2", detail::one_based(b.now.s2)},
      {"E", b.energy},
      {"E_aux", b.energy_aux},
      {"E_next", b.energy_next},
      {"a_size", b.edges.a},
      {"b_size", b.edges.b},
      {"c_size", b.edges.c},
      {"per_vertex_delta", b.per_vertex_delta},
      {"delta_E", b.energy_next - b.energy},
  };
}

} // namespace krev
