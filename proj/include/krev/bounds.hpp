#pragma once

#include "krev/energy.hpp"
#include "krev/graph.hpp"
#include "krev/trajectory.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

namespace krev {

/// Closed-form transient and energy bounds for a graph and threshold.
struct BoundReport {
  std::int64_t general_bound = 0;                // n(Delta+1) - 1
  std::optional<std::int64_t> high_k_bound;      // n(k+1) - 1, when 2k > Delta
  std::optional<std::int64_t> tree_bound;        // n(k+1) - 1, trees only
  std::optional<std::int64_t> tree_max_energy;   // nk, trees only
  std::optional<std::int64_t> theorem2_bound;    // E_final + n - 1, given a trajectory
};

inline BoundReport bound_report(const Graph &g, int k, const TrajectoryResult *traj = nullptr) {
  detail::require_k(k);
  const std::int64_t n = g.n();
  const std::int64_t delta = g.max_degree();
  BoundReport r;
  r.general_bound = n * (delta + 1) - 1;
  if (2LL * k > delta)
    r.high_k_bound = n * (k + 1) - 1;
  if (is_tree(g)) {
    r.tree_bound = n * (k + 1) - 1;
    r.tree_max_energy = n * k;
  }
  if (traj)
    r.theorem2_bound = traj->plateau_energy + n - 1;
  return r;
}

/// Absent bounds are omitted rather than written as null.
inline void to_json(nlohmann::json &j, const BoundReport &r) {
  j = nlohmann::json{{"general_bound", r.general_bound}};
  if (r.high_k_bound) j["high_k_bound"] = *r.high_k_bound;
  if (r.tree_bound) j["tree_bound"] = *r.tree_bound;
  if (r.tree_max_energy) j["tree_max_energy"] = *r.tree_max_energy;
  if (r.theorem2_bound) j["theorem2_bound"] = *r.theorem2_bound;
}

struct MaxEnergyResult {
  Energy max_energy = 0;
  std::vector<Configuration> argmax; // in increasing bit order
};

inline constexpr int max_brute_force_order = 24;

/// Brute force over all 2^n configurations of a tree.
inline MaxEnergyResult max_tree_energy_check(const Graph &tree, int k) {
  detail::require_k(k);
  if (!is_tree(tree))
    throw std::invalid_argument("max_tree_energy_check requires a tree");
  if (tree.n() > max_brute_force_order)
    throw std::invalid_argument("max_tree_energy_check supports at most " +
                                std::to_string(max_brute_force_order) + " vertices");
  const int n = tree.n();
  std::vector<Word> rows(n);
  for (Vertex v = 0; v < n; ++v)
    rows[v] = tree.row(v)[0];

  MaxEnergyResult out;
  out.max_energy = -1;
  const Word count = Word{1} << n;
  for (Word bits = 0; bits < count; ++bits) {
    Energy e = 0;
    for (Vertex i = 0; i < n; ++i) {
      const Word own = (bits >> i) & 1U ? ~Word{0} : Word{0};
      const int op = std::popcount(rows[i] & (bits ^ own));
      e += op >= k ? op - k : k - op;
    }
    if (e > out.max_energy) {
      out.max_energy = e;
      out.argmax.clear();
    }
    if (e == out.max_energy)
      out.argmax.push_back(Configuration::from_bits(n, bits));
  }
  return out;
}

} // namespace krev
