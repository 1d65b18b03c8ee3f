// krev: command-line front end for k-reversible process analysis.
//
// Exit codes: 0 success, 1 internal invariant violation, 2 usage or input
// error, 3 a checked claim was not reproduced.

#include "krev/krev.hpp"

#include "CLI11.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

enum Exit : int { ok = 0, internal = 1, usage = 2, refuted = 3 };

struct RunSpec {
  std::string graph_path;
  std::string config;
  int k = 2;
  int n = 0;
  int workers = 1;
  std::string checkpoint;
  std::string format = "text";
  bool trace = false;
  bool verify = false;
};

krev::Graph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot read graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return krev::parse_edge_list(buf.str());
}

int cmd_simulate(const RunSpec &spec) {
  const auto g = load_graph(spec.graph_path);
  const auto x0 = krev::parse_config(spec.config, g.n());
  const auto r = krev::run_trajectory(g, x0, spec.k);
  if (spec.format == "json") {
    std::cout << nlohmann::ordered_json{{"tau", r.tau}, {"period", r.period}, {"E_final", r.plateau_energy}}.dump()
              << '\n';
  } else {
    std::cout << "tau=" << r.tau << " period=" << r.period << " E_final=" << r.plateau_energy << '\n';
  }
  if (spec.trace)
    krev::write_trace_jsonl(std::cout, r);
  return ok;
}

int cmd_bounds(const RunSpec &spec) {
  const auto g = load_graph(spec.graph_path);
  std::optional<krev::TrajectoryResult> traj;
  if (!spec.config.empty())
    traj = krev::run_trajectory(g, krev::parse_config(spec.config, g.n()), spec.k);
  const auto report = krev::bound_report(g, spec.k, traj ? &*traj : nullptr);
  const nlohmann::json j = report;
  if (spec.format == "json") {
    std::cout << j.dump() << '\n';
  } else {
    for (const auto &[key, value] : j.items())
      std::cout << key << '=' << value << '\n';
    if (traj)
      std::cout << "tau=" << traj->tau << '\n';
  }
  return ok;
}

int cmd_energy_trace(const RunSpec &spec) {
  const auto g = load_graph(spec.graph_path);
  const auto r = krev::run_trajectory(g, krev::parse_config(spec.config, g.n()), spec.k);
  // One breakdown per transition up to the first repeat.
  for (std::size_t t = 0; t + 1 < r.trace.size(); ++t) {
    const auto b = krev::delta_energy_breakdown(g, r.trace[t].x, spec.k);
    if (spec.format == "json") {
      nlohmann::json j = b;
      j["t"] = t;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "t=" << t << " x=" << r.trace[t].x.to_string() << " E=" << b.energy << " E_aux=" << b.energy_aux
                << " dE=" << b.energy_next - b.energy << " |A|=" << b.edges.a << " |B|=" << b.edges.b
                << " |C|=" << b.edges.c << '\n';
    }
  }
  return ok;
}

int cmd_search(const RunSpec &spec) {
  const auto g = load_graph(spec.graph_path);
  const auto res = krev::max_transient_search(g, spec.k);
  const auto records = krev::extremal_records(g, res);
  if (spec.format == "csv") {
    std::cout << krev::records_csv(records);
  } else if (spec.format == "json") {
    nlohmann::ordered_json j;
    j["tree_code"] = res.code.hex();
    j["k"] = spec.k;
    j["tau_max"] = res.tau_max;
    j["configs_raw"] = res.raw_count();
    j["configs_mod_negation"] = res.mod_negation_count();
    j["records"] = records;
    j["property_checks"] = res.stats;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "tau_max=" << res.tau_max << " configs_raw=" << res.raw_count()
              << " configs_mod_negation=" << res.mod_negation_count() << '\n';
    for (const auto &r : records)
      std::cout << r.config.to_string() << " tau=" << r.tau << " period=" << r.period << '\n';
  }
  return res.stats.total_violations() == 0 ? ok : internal;
}

krev::ConjectureOptions conjecture_options(const RunSpec &spec) {
  krev::ConjectureOptions opts;
  opts.k = spec.k;
  opts.workers = spec.workers;
  if (!spec.checkpoint.empty())
    opts.checkpoint = spec.checkpoint;
  return opts;
}

int cmd_conjecture(const RunSpec &spec) {
  const auto report = krev::verify_conjecture(spec.n, conjecture_options(spec));
  if (spec.format == "json") {
    std::cout << krev::report_json(report).dump(2) << '\n';
  } else if (spec.format == "csv") {
    std::cout << krev::records_csv(report.extremal_records);
  } else {
    std::cout << (report.pass ? "pass" : "fail") << " n=" << report.n << " k=" << report.k
              << " tau_max=" << report.tau_max << " (expected " << report.expected_tau_max << ")"
              << " trees=" << report.tree_count << " (expected " << report.expected_tree_count << ")"
              << " searched=" << report.trees_searched << " trajectories=" << report.stats.trajectories << '\n';
    std::cout << "one config per tree: mod negation=" << std::boolalpha << report.one_config_per_tree_mod_negation
              << " mod automorphism+negation=" << report.one_config_per_tree_mod_automorphism_and_negation << '\n';
    for (const auto &[code, v] : report.configs_per_tree)
      std::cout << code << " raw=" << v.raw << " mod_negation=" << v.mod_negation
                << " mod_automorphism_and_negation=" << v.mod_automorphism_and_negation << '\n';
  }
  if (report.stats.total_violations() != 0) {
    std::cerr << "bound violations during sweep: " << report.stats.total_violations() << '\n';
    return internal;
  }
  return report.pass ? ok : refuted;
}

int cmd_generate(const RunSpec &spec) {
  const auto family = krev::algorithm1_generate(spec.n);
  bool all_match = true;
  nlohmann::ordered_json trees = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto &[tree, x] = family[j];
    std::optional<int> tau;
    if (spec.verify) {
      tau = krev::run_trajectory(tree, x, 2).tau;
      all_match = all_match && *tau == spec.n - 3;
    }
    if (spec.format == "json") {
      nlohmann::ordered_json t{{"index", j + 1}, {"edges", krev::edges_string(tree)}, {"config", x.to_string()}};
      if (tau)
        t["tau"] = *tau;
      trees.push_back(t);
    } else {
      std::cout << "# T" << j + 1 << " config " << x.to_string();
      if (tau)
        std::cout << " tau=" << *tau;
      std::cout << '\n' << krev::to_edge_list(tree);
    }
  }
  if (spec.format == "json")
    std::cout << trees.dump(2) << '\n';
  if (spec.verify && !all_match) {
    std::cerr << "generated family does not reach tau = n-3\n";
    return refuted;
  }
  return ok;
}

int cmd_validate_alg1(const RunSpec &spec) {
  if (spec.n < 5)
    throw std::invalid_argument("validate-alg1 requires n >= 5");
  auto opts = conjecture_options(spec);
  const auto cv = krev::cross_validate_algorithm1(spec.n, opts);
  if (spec.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = spec.n;
    j["verdict"] = cv.pass ? "pass" : "fail";
    j["generated_trees"] = cv.generated_codes.size();
    j["extremal_trees"] = cv.extremal_codes.size();
    j["failures"] = cv.failures;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (cv.pass ? "pass" : "fail") << " n=" << spec.n << " generated=" << cv.generated_codes.size()
              << " extremal=" << cv.extremal_codes.size() << '\n';
    for (const auto &f : cv.failures)
      std::cout << "  " << f << '\n';
  }
  return cv.pass ? ok : refuted;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Analysis of k-reversible processes on graphs"};
  app.require_subcommand(1);
  RunSpec spec;

  auto add_graph = [&](CLI::App *c) { c->add_option("--graph", spec.graph_path, "Edge-list file")->required(); };
  auto add_k = [&](CLI::App *c) { c->add_option("--k", spec.k, "Threshold k")->check(CLI::PositiveNumber); };
  auto add_format = [&](CLI::App *c, std::vector<std::string> allowed) {
    c->add_option("--format", spec.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_n = [&](CLI::App *c) { c->add_option("--n", spec.n, "Number of vertices")->required(); };
  auto add_workers = [&](CLI::App *c) {
    c->add_option("--workers", spec.workers, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--checkpoint", spec.checkpoint, "Resumable ledger file");
  };

  auto *simulate = app.add_subcommand("simulate", "Run one trajectory");
  add_graph(simulate);
  simulate->add_option("--config", spec.config, "Initial configuration")->required();
  add_k(simulate);
  simulate->add_flag("--trace", spec.trace, "Print per-step JSON lines");
  add_format(simulate, {"text", "json"});

  auto *bounds = app.add_subcommand("bounds", "Evaluate the transient and energy bounds");
  add_graph(bounds);
  bounds->add_option("--config", spec.config, "Initial configuration (adds the plateau-energy bound)");
  add_k(bounds);
  add_format(bounds, {"text", "json"});

  auto *energy_trace = app.add_subcommand("energy-trace", "Energy accounting at every step");
  add_graph(energy_trace);
  energy_trace->add_option("--config", spec.config, "Initial configuration")->required();
  add_k(energy_trace);
  add_format(energy_trace, {"text", "json"});

  auto *search = app.add_subcommand("search", "Largest transient over all configurations of a tree");
  add_graph(search);
  add_k(search);
  add_format(search, {"text", "json", "csv"});

  auto *conjecture = app.add_subcommand("conjecture", "Exhaustive transient check over all trees on n vertices");
  add_n(conjecture);
  add_k(conjecture);
  add_workers(conjecture);
  add_format(conjecture, {"text", "json", "csv"});

  auto *generate = app.add_subcommand("generate", "Emit the explicit extremal tree family");
  add_n(generate);
  generate->add_flag("--verify", spec.verify, "Simulate each tree and check tau = n-3");
  add_format(generate, {"text", "json"});

  auto *validate = app.add_subcommand("validate-alg1", "Compare the explicit family with the exhaustive search");
  add_n(validate);
  add_workers(validate);
  add_format(validate, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*simulate) return cmd_simulate(spec);
    if (*bounds) return cmd_bounds(spec);
    if (*energy_trace) return cmd_energy_trace(spec);
    if (*search) return cmd_search(spec);
    if (*conjecture) return cmd_conjecture(spec);
    if (*generate) return cmd_generate(spec);
    if (*validate) return cmd_validate_alg1(spec);
  } catch (const krev::ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const krev::InvariantViolation &e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return internal;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return internal;
  }
  return usage;
}
