#include "streambound/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "streambound/bound.hpp"
#include "streambound/fib.hpp"
#include "streambound/sim.hpp"
#include "streambound/topology.hpp"

namespace streambound {
namespace {

using nlohmann::ordered_json;

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

Fanout parse_fanout(const std::string& text) {
  if (text == "inf") return Fanout::unbounded();
  try {
    size_t consumed = 0;
    const int k = std::stoi(text, &consumed);
    if (consumed == text.size()) return Fanout::finite(k);
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("--k expects an integer or \"inf\" (got \"" +
                              text + "\")");
}

ForcedPlacement parse_pin(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument(
        "--force-place expects TREE:POSITION:NODE (got \"" + text + "\")");
  };
  std::vector<int> parts;
  size_t begin = 0;
  while (begin <= text.size()) {
    const size_t colon = text.find(':', begin);
    const std::string field =
        text.substr(begin, colon == std::string::npos ? colon : colon - begin);
    try {
      size_t consumed = 0;
      parts.push_back(std::stoi(field, &consumed));
      if (consumed != field.size()) throw bad();
    } catch (const std::invalid_argument&) {
      throw bad();
    } catch (const std::out_of_range&) {
      throw bad();
    }
    if (colon == std::string::npos) break;
    begin = colon + 1;
  }
  if (parts.size() != 3) throw bad();
  return ForcedPlacement{parts[0], parts[1], parts[2]};
}

// Writes the payload to --out when given, to the primary stream otherwise.
int deliver(const RunConfig& cfg, const std::string& payload,
            std::ostream& out, std::ostream& err) {
  if (cfg.out.empty()) {
    out << payload;
    return kExitSuccess;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    err << "usage error: cannot open --out file \"" << cfg.out << "\"\n";
    return kExitUsage;
  }
  file << payload;
  return kExitSuccess;
}

void require_t_max(long long t_max) {
  if (t_max < 1) {
    throw std::invalid_argument("--t-max must be >= 1 (got " +
                                std::to_string(t_max) + ")");
  }
}

ordered_json fanout_json(const Fanout& k) {
  if (k.is_unbounded()) return ordered_json("inf");
  return ordered_json(k.finite_value());
}

// ---------------------------------------------------------------------------
// bound: the N-bar table for one (U, k).

int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_t_max(cfg.t_max);
  const Scenario sc(cfg.U, cfg.k);
  const bool finite = cfg.k.is_finite();

  struct Row {
    long long t = 0;
    ExactInt exact;
    double asymptotic = 0.0;
    ExactInt infinite_k;
  };
  std::vector<Row> rows;
  std::optional<long long> truncated_at;
  for (long long t = 1; t <= cfg.t_max; ++t) {
    try {
      Row r;
      r.t = t;
      r.exact = exact_bound(sc, static_cast<double>(t));
      if (finite) {
        r.asymptotic = asymptotic_bound(sc, t);
        r.infinite_k = infinite_k_bound(cfg.U, t);
      }
      rows.push_back(std::move(r));
    } catch (const std::overflow_error&) {
      truncated_at = t;
      break;
    }
  }

  std::string payload;
  if (cfg.format == "json") {
    ordered_json j;
    j["U"] = cfg.U;
    j["k"] = fanout_json(cfg.k);
    j["rows"] = ordered_json::array();
    for (const Row& r : rows) {
      ordered_json row;
      row["t"] = r.t;
      row["exact"] = r.exact.str();
      if (finite) {
        row["asymptotic"] = r.asymptotic;
        row["infinite_k"] = r.infinite_k.str();
      }
      j["rows"].push_back(std::move(row));
    }
    if (truncated_at) j["truncated_at"] = *truncated_at;
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << (finite ? "t,exact,asymptotic,infinite_k\n" : "t,exact\n");
    for (const Row& r : rows) {
      csv << r.t << ',' << r.exact.str();
      if (finite) {
        csv << ',' << fixed(r.asymptotic, 4) << ',' << r.infinite_k.str();
      }
      csv << '\n';
    }
    payload = csv.str();
  }

  const int rc = deliver(cfg, payload, out, err);
  if (rc != kExitSuccess) return rc;
  if (truncated_at) {
    err << "overflow: the exact bound exceeds 256-bit integers at t = "
        << *truncated_at << "; table truncated to " << rows.size()
        << " rows\n";
    return kExitOverflow;
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// constants: growth rate and normalization constant per fan-out.

int cmd_constants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.k_max < 2) {
    throw std::invalid_argument("--k-max must be >= 2 (got " +
                                std::to_string(cfg.k_max) + ")");
  }
  std::string payload;
  if (cfg.format == "json") {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (long long k = 2; k <= cfg.k_max; ++k) {
      const int ki = static_cast<int>(k);
      j["rows"].push_back(
          {{"k", k}, {"phi", phi(ki)}, {"q_at_phi", q_at_phi(ki)}});
    }
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "k,phi,q_at_phi\n";
    for (long long k = 2; k <= cfg.k_max; ++k) {
      const int ki = static_cast<int>(k);
      csv << k << ',' << fixed(phi(ki), 5) << ',' << fixed(q_at_phi(ki), 5)
          << '\n';
    }
    payload = csv.str();
  }
  return deliver(cfg, payload, out, err);
}

// ---------------------------------------------------------------------------
// tree / forest: construction plus the histogram-vs-bound cross-check.

struct HistRow {
  int offset = 0;
  long long count = 0;
  long long cumulative = 0;
  ExactInt bound;
  bool pass = false;
};

// The per-offset reception counts of a bound-attaining schedule must satisfy
// cumulative(t) == min(P, N-bar(t)) at every delay t.
std::pair<std::vector<HistRow>, bool> cross_check(
    const std::vector<long long>& hist, int P, const Scenario& sc) {
  std::vector<HistRow> rows;
  long long cumulative = 0;
  bool all_pass = true;
  for (size_t offset = 1; offset < hist.size(); ++offset) {
    HistRow row;
    row.offset = static_cast<int>(offset);
    row.count = hist[offset];
    cumulative += hist[offset];
    row.cumulative = cumulative;
    row.bound = exact_bound(sc, static_cast<double>(offset));
    row.pass = ExactInt(cumulative) == std::min(row.bound, ExactInt(P));
    all_pass = all_pass && row.pass;
    rows.push_back(std::move(row));
  }
  if (cumulative != P) all_pass = false;
  return {std::move(rows), all_pass};
}

std::string histogram_csv(const std::vector<HistRow>& rows) {
  std::ostringstream csv;
  csv << "offset,count,cumulative,bound,verdict\n";
  for (const HistRow& r : rows) {
    csv << r.offset << ',' << r.count << ',' << r.cumulative << ','
        << r.bound.str() << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return csv.str();
}

ordered_json histogram_json(const std::vector<HistRow>& rows) {
  ordered_json j = ordered_json::array();
  for (const HistRow& r : rows) {
    j.push_back({{"offset", r.offset},
                 {"count", r.count},
                 {"cumulative", r.cumulative},
                 {"bound", r.bound.str()},
                 {"verdict", r.pass ? "PASS" : "FAIL"}});
  }
  return j;
}

int emit_topology(const RunConfig& cfg, const ordered_json& topology,
                  const std::vector<HistRow>& rows, bool pass,
                  std::ostream& out, std::ostream& err) {
  std::string payload;
  if (cfg.format == "json") {
    ordered_json j;
    j["topology"] = topology;
    j["histogram"] = histogram_json(rows);
    j["verdict"] = pass ? "PASS" : "FAIL";
    payload = j.dump(2) + "\n";
  } else {
    payload = histogram_csv(rows);
  }
  const int rc = deliver(cfg, payload, out, err);
  if (rc != kExitSuccess) return rc;
  if (!pass) {
    err << "bound violation: the construction does not attain the exact "
           "bound\n";
    return kExitBoundViolation;
  }
  return kExitSuccess;
}

int cmd_tree(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ScheduledTree tree = build_single_tree(cfg.U, cfg.P);
  const Scenario sc(cfg.U, Fanout::finite(cfg.U));
  auto [rows, pass] = cross_check(offset_histogram(tree), cfg.P, sc);
  return emit_topology(cfg, tree_to_json(tree), rows, pass, out, err);
}

int cmd_forest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.k.is_unbounded()) {
    throw std::invalid_argument(
        "the forest construction needs a finite fan-out k");
  }
  IntertwineOptions opts;
  opts.expansion_cap = cfg.cap;
  const Forest forest =
      build_forest(cfg.U, cfg.k.finite_value(), cfg.P, opts);
  const Scenario sc(cfg.U, cfg.k);
  // Every tree shares the greedy shape, so tree 0 speaks for the per-chunk
  // reception offsets of the whole forest.
  auto [rows, pass] = cross_check(offset_histogram(forest.trees[0]), cfg.P, sc);
  return emit_topology(cfg, forest_to_json(forest), rows, pass, out, err);
}

// ---------------------------------------------------------------------------
// simulate: run a strategy and verdict N_sim(t) against the bound.

std::unique_ptr<Strategy> make_strategy(const RunConfig& cfg) {
  if (cfg.strategy == "serial-tree") {
    return strategy_serial_tree(build_single_tree(cfg.U, cfg.P));
  }
  if (cfg.strategy == "serial-forest") {
    if (cfg.k.is_unbounded()) {
      throw std::invalid_argument(
          "the serial forest needs a finite fan-out k");
    }
    IntertwineOptions opts;
    opts.expansion_cap = cfg.cap;
    return strategy_serial_forest(
        build_forest(cfg.U, cfg.k.finite_value(), cfg.P, opts));
  }
  if (cfg.strategy == "parallel") {
    if (cfg.k.is_unbounded()) {
      throw std::invalid_argument(
          "the parallel balanced tree needs a finite fan-out k");
    }
    return strategy_parallel_balanced(cfg.U, cfg.k.finite_value(), cfg.P);
  }
  if (cfg.strategy == "snowball") return strategy_snowball(cfg.U, cfg.P);
  if (cfg.strategy == "random") {
    return strategy_random(cfg.U, cfg.k, cfg.P, cfg.seed);
  }
  throw std::invalid_argument(
      "unknown strategy \"" + cfg.strategy +
      "\" (expected serial-tree, serial-forest, parallel, snowball, or "
      "random)");
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_t_max(cfg.t_max);
  SimScenario sc;
  sc.U = cfg.U;
  sc.k = cfg.k;
  sc.P = cfg.P;
  sc.horizon = cfg.t_max;
  sc.chunk_count = cfg.chunks;

  std::unique_ptr<Strategy> strategy = make_strategy(cfg);
  const Trace trace = simulate(*strategy, sc);
  if (!cfg.trace_out.empty()) {
    std::ofstream file(cfg.trace_out, std::ios::binary);
    if (!file) {
      err << "usage error: cannot open --trace-out file \"" << cfg.trace_out
          << "\"\n";
      return kExitUsage;
    }
    file << trace_to_jsonl(trace);
  }
  const Metrics metrics = compute_metrics(trace);

  const Scenario bound_sc(cfg.U, cfg.k);
  struct Verdict {
    long long t = 0;
    long long n_sim = 0;
    ExactInt bound;
    const char* verdict = "";
  };
  std::vector<Verdict> verdicts;
  std::optional<long long> truncated_at;
  bool violated = false;
  for (long long t = 1; t <= cfg.t_max; ++t) {
    Verdict v;
    v.t = t;
    v.n_sim = staircase_at(metrics.N_of_t, t);
    try {
      v.bound = exact_bound(bound_sc, static_cast<double>(t));
    } catch (const std::overflow_error&) {
      truncated_at = t;
      break;
    }
    if (ExactInt(v.n_sim) > v.bound) {
      v.verdict = "VIOLATION";
      violated = true;
    } else if (ExactInt(v.n_sim) == v.bound) {
      v.verdict = "EQUAL";
    } else {
      v.verdict = "BELOW";
    }
    verdicts.push_back(std::move(v));
  }

  std::string payload;
  if (cfg.format == "json") {
    ordered_json j;
    j["strategy"] = strategy->name();
    j["U"] = cfg.U;
    j["k"] = fanout_json(cfg.k);
    j["P"] = cfg.P;
    j["horizon"] = cfg.t_max;
    j["chunks"] = cfg.chunks;
    j["seed"] = cfg.seed;
    j["metrics"] = metrics_to_json(metrics);
    j["verdicts"] = ordered_json::array();
    for (const Verdict& v : verdicts) {
      j["verdicts"].push_back({{"t", v.t},
                               {"N_sim", v.n_sim},
                               {"bound", v.bound.str()},
                               {"verdict", v.verdict}});
    }
    if (truncated_at) j["truncated_at"] = *truncated_at;
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "t,N_sim,bound,verdict\n";
    for (const Verdict& v : verdicts) {
      csv << v.t << ',' << v.n_sim << ',' << v.bound.str() << ','
          << v.verdict << '\n';
    }
    payload = csv.str();
  }

  const int rc = deliver(cfg, payload, out, err);
  if (rc != kExitSuccess) return rc;
  if (violated) {
    err << "bound violation: N_sim(t) exceeded the exact bound\n";
    return kExitBoundViolation;
  }
  if (truncated_at) {
    err << "overflow: the exact bound exceeds 256-bit integers at t = "
        << *truncated_at << "; verdicts truncated\n";
    return kExitOverflow;
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// compare: serialized (k = U, 2U, inf) versus parallel balanced, one table.

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_t_max(cfg.t_max);
  const int k_single = std::max(cfg.U, 2);
  const int k_forest = 2 * k_single;
  const Scenario s_single(cfg.U, Fanout::finite(k_single));
  const Scenario s_forest(cfg.U, Fanout::finite(k_forest));
  const Scenario s_inf(cfg.U, Fanout::unbounded());

  const std::string col_single = "serial_k" + std::to_string(k_single);
  const std::string col_forest = "serial_k" + std::to_string(k_forest);
  const std::string col_parallel = "parallel_k" + std::to_string(k_single);

  struct Row {
    long long t = 0;
    ExactInt serial_single, serial_forest, serial_inf, parallel;
  };
  std::vector<Row> rows;
  std::optional<long long> truncated_at;
  for (long long t = 1; t <= cfg.t_max; ++t) {
    try {
      Row r;
      r.t = t;
      r.serial_single = exact_bound(s_single, static_cast<double>(t));
      r.serial_forest = exact_bound(s_forest, static_cast<double>(t));
      r.serial_inf = exact_bound(s_inf, static_cast<double>(t));
      r.parallel = parallel_balanced_closed_form(k_single, t);
      rows.push_back(std::move(r));
    } catch (const std::overflow_error&) {
      truncated_at = t;
      break;
    }
  }

  std::string payload;
  if (cfg.format == "json") {
    ordered_json j;
    j["U"] = cfg.U;
    j["columns"] = {"t", col_single, col_forest, "serial_kinf", col_parallel};
    j["rows"] = ordered_json::array();
    for (const Row& r : rows) {
      ordered_json row;
      row["t"] = r.t;
      row[col_single] = r.serial_single.str();
      row[col_forest] = r.serial_forest.str();
      row["serial_kinf"] = r.serial_inf.str();
      row[col_parallel] = r.parallel.str();
      j["rows"].push_back(std::move(row));
    }
    if (truncated_at) j["truncated_at"] = *truncated_at;
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "t," << col_single << ',' << col_forest << ",serial_kinf,"
        << col_parallel << '\n';
    for (const Row& r : rows) {
      csv << r.t << ',' << r.serial_single.str() << ','
          << r.serial_forest.str() << ',' << r.serial_inf.str() << ','
          << r.parallel.str() << '\n';
    }
    payload = csv.str();
  }

  const int rc = deliver(cfg, payload, out, err);
  if (rc != kExitSuccess) return rc;
  if (truncated_at) {
    err << "overflow: a column exceeds 256-bit integers at t = "
        << *truncated_at << "; table truncated to " << rows.size()
        << " rows\n";
    return kExitOverflow;
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// intertwine: run the placement search and report the assignment.

int cmd_intertwine(const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  if (cfg.k.is_unbounded()) {
    throw std::invalid_argument("intertwining needs a finite fan-out k");
  }
  IntertwineOptions opts;
  opts.expansion_cap = cfg.cap;
  opts.forced = cfg.forced;
  const IntertwineAssignment result =
      solve_intertwining(cfg.U, cfg.k.finite_value(), cfg.P, opts);

  ordered_json j;
  switch (result.status) {
    case SolveStatus::solved:
      j["status"] = "solved";
      break;
    case SolveStatus::infeasible:
      j["status"] = "infeasible";
      break;
    case SolveStatus::aborted:
      j["status"] = "aborted";
      break;
  }
  j["expanded"] = result.expanded;
  j["backtracks"] = result.backtracks;
  j["placements"] = ordered_json::array();
  for (size_t i = 0; i < result.placements.size(); ++i) {
    const std::vector<NodeId>& assignment = result.placements[i];
    for (size_t position = 1; position < assignment.size(); ++position) {
      j["placements"].push_back({{"tree", i + 1},
                                 {"position", position},
                                 {"node", assignment[position]}});
    }
  }
  j["diagnostics"] = result.diagnostics;
  bool valid = false;
  if (result.forest.has_value()) {
    ordered_json conflicts = ordered_json::array();
    for (const SlotConflict& c : check_slot_conflicts(*result.forest)) {
      conflicts.push_back(
          {{"node", c.node}, {"residue", c.residue}, {"trees", c.trees}});
    }
    valid = conflicts.empty() && validate_forest(*result.forest).empty();
    j["conflicts"] = std::move(conflicts);
    j["valid"] = valid;
  }
  const std::string payload = j.dump(2) + "\n";

  const int rc = deliver(cfg, payload, out, err);
  if (rc != kExitSuccess) return rc;
  if (result.status != SolveStatus::solved) {
    err << (result.status == SolveStatus::aborted
                ? "infeasible: search aborted at the expansion cap\n"
                : "infeasible: no conflict-free intertwining\n");
    for (const std::string& d : result.diagnostics) err << "  " << d << '\n';
    return kExitInfeasible;
  }
  return valid ? kExitSuccess : kExitInternal;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  std::string k_text = "2";
  std::vector<std::string> pins;

  CLI::App app{"stream-diffusion bound and scheduling toolkit", "streambound"};
  app.require_subcommand(1);

  const auto add_output = [&](CLI::App* cmd, bool with_format = true) {
    if (with_format) {
      cmd->add_option("--format", cfg.format, "output format")
          ->check(CLI::IsMember({"csv", "json"}))
          ->capture_default_str();
    }
    cmd->add_option("--out", cfg.out,
                    "write the payload to this file instead of stdout");
  };

  CLI::App* bound =
      app.add_subcommand("bound", "exact and asymptotic bound table");
  bound->add_option("--U", cfg.U, "upload capacity")->capture_default_str();
  bound->add_option("--k", k_text, "fan-out (integer or \"inf\")")
      ->capture_default_str();
  bound->add_option("--t-max", cfg.t_max, "last delay slot")
      ->capture_default_str();
  add_output(bound);

  CLI::App* constants =
      app.add_subcommand("constants", "growth constants per fan-out");
  constants->add_option("--k-max", cfg.k_max, "largest fan-out")
      ->capture_default_str();
  add_output(constants);

  CLI::App* tree = app.add_subcommand(
      "tree", "serialized single tree (k = U) with bound cross-check");
  tree->add_option("--U", cfg.U, "upload capacity")->required();
  tree->add_option("--P", cfg.P, "peer count")->required();
  add_output(tree);

  CLI::App* forest = app.add_subcommand(
      "forest", "intertwined forest of k/U trees with bound cross-check");
  forest->add_option("--U", cfg.U, "upload capacity")->required();
  forest->add_option("--k", k_text, "fan-out (multiple of U)")->required();
  forest->add_option("--P", cfg.P, "peer count")->required();
  forest->add_option("--cap", cfg.cap, "search expansion cap")
      ->capture_default_str();
  add_output(forest);

  CLI::App* simulate =
      app.add_subcommand("simulate", "run a strategy and verdict it "
                                     "against the bound");
  simulate->add_option("--U", cfg.U, "upload capacity")->required();
  simulate->add_option("--k", k_text, "fan-out (integer or \"inf\")")
      ->required();
  simulate->add_option("--P", cfg.P, "peer count")->required();
  simulate
      ->add_option("--strategy", cfg.strategy,
                   "serial-tree | serial-forest | parallel | snowball | "
                   "random")
      ->required();
  simulate->add_option("--t-max", cfg.t_max, "simulation horizon in slots");
  simulate->add_option("--chunks", cfg.chunks, "chunks emitted by the source")
      ->capture_default_str();
  simulate->add_option("--seed", cfg.seed, "random-strategy seed")
      ->capture_default_str();
  simulate->add_option("--cap", cfg.cap, "forest search expansion cap")
      ->capture_default_str();
  simulate->add_option("--trace-out", cfg.trace_out,
                       "write the transmission trace (JSONL) to this file");
  add_output(simulate);

  CLI::App* compare = app.add_subcommand(
      "compare", "serialized vs parallel dissemination dataset");
  compare->add_option("--U", cfg.U, "upload capacity")->capture_default_str();
  compare->add_option("--t-max", cfg.t_max, "last delay slot");
  add_output(compare);

  CLI::App* intertwine = app.add_subcommand(
      "intertwine", "placement search for the forest (JSON report)");
  intertwine->add_option("--U", cfg.U, "upload capacity")->required();
  intertwine->add_option("--k", k_text, "fan-out (multiple of U)")
      ->required();
  intertwine->add_option("--P", cfg.P, "peer count")->required();
  intertwine->add_option("--cap", cfg.cap, "search expansion cap")
      ->capture_default_str();
  intertwine->add_option("--force-place", pins,
                         "pin NODE at POSITION of TREE (TREE:POSITION:NODE, "
                         "repeatable)");
  add_output(intertwine, /*with_format=*/false);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    cfg.k = parse_fanout(k_text);
    for (const std::string& pin : pins) cfg.forced.push_back(parse_pin(pin));

    // Simulation and comparison tables default to a longer horizon than the
    // seven-row bound table.
    if (simulate->parsed() && simulate->count("--t-max") == 0) cfg.t_max = 20;
    if (compare->parsed() && compare->count("--t-max") == 0) cfg.t_max = 20;

    if (bound->parsed()) {
      cfg.command = "bound";
      return cmd_bound(cfg, out, err);
    }
    if (constants->parsed()) {
      cfg.command = "constants";
      return cmd_constants(cfg, out, err);
    }
    if (tree->parsed()) {
      cfg.command = "tree";
      return cmd_tree(cfg, out, err);
    }
    if (forest->parsed()) {
      cfg.command = "forest";
      return cmd_forest(cfg, out, err);
    }
    if (simulate->parsed()) {
      cfg.command = "simulate";
      return cmd_simulate(cfg, out, err);
    }
    if (compare->parsed()) {
      cfg.command = "compare";
      return cmd_compare(cfg, out, err);
    }
    cfg.command = "intertwine";
    return cmd_intertwine(cfg, out, err);
  } catch (const IntertwineError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace streambound
