#pragma once

#include "krev/configuration.hpp"
#include "krev/dynamics.hpp"
#include "krev/energy.hpp"
#include "krev/error.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

namespace krev {

struct TraceRecord {
  int t = 0;
  Configuration x;
  Energy energy = 0;
};

struct TrajectoryResult {
  int tau = 0;              // transient length
  int period = 0;           // 1 or 2
  Energy plateau_energy = 0; // E at the first periodic configuration
  std::vector<TraceRecord> trace; // times 0..tau+period
};

/// Step budget large enough to observe the first repeat on any input:
/// the transient bound n(Delta+1)-1 plus one full period plus slack.
inline int default_max_steps(const Graph &g) { return g.n() * (g.max_degree() + 1) + 3; }

/**
 * Iterates the process from x0 until a configuration repeats. Every
 * configuration is recorded with the time it was first seen, so the first
 * repeat at time t of a configuration first seen at t0 gives tau = t0 and
 * period = t - t0 exactly.
 *
 * Throws InvariantViolation if no repeat shows up within max_steps or if
 * the detected period exceeds two; both mean the simulator is broken.
 */
inline TrajectoryResult run_trajectory(const Graph &g, const Configuration &x0, int k,
                                       std::optional<int> max_steps = std::nullopt) {
  detail::require_k(k);
  detail::require_match(g, x0);
  const int floor = g.n() * (g.max_degree() + 1) + 1;
  const int budget = max_steps.value_or(default_max_steps(g));
  if (budget < floor)
    throw std::invalid_argument("max_steps must be at least n(Delta+1)+1 = " + std::to_string(floor));

  TrajectoryResult result;
  std::unordered_map<Configuration, int, ConfigurationHash> first_seen;
  Configuration x = x0;
  for (int t = 0; t <= budget; ++t) {
    result.trace.push_back({t, x, energy(g, x, k)});
    auto [it, inserted] = first_seen.try_emplace(x, t);
    if (!inserted) {
      result.tau = it->second;
      result.period = t - it->second;
      result.plateau_energy = result.trace[result.tau].energy;
      if (result.period > 2)
        throw InvariantViolation("detected period " + std::to_string(result.period) + " > 2");
      return result;
    }
    x = step(g, x, k);
  }
  throw InvariantViolation("no repeated configuration within " + std::to_string(budget) + " steps");
}

template <class Json> void to_json(Json &j, const TraceRecord &r) {
  j = Json{{"t", r.t}, {"x", r.x.to_string()}, {"E", r.energy}};
}

/// One {"t","x","E"} object per line.
inline void write_trace_jsonl(std::ostream &out, const TrajectoryResult &r) {
  for (const auto &rec : r.trace)
    out << nlohmann::ordered_json(rec).dump() << '\n';
}

} // namespace krev
