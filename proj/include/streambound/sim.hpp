#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "streambound/exact_int.hpp"
#include "streambound/fib.hpp"
#include "streambound/topology.hpp"

namespace streambound {

// One store-and-forward transfer. The transmission occupies the sender's
// uplink over slots [start, start + duration) at rate 1/duration, and the
// receiver completes the chunk at slot start + duration. duration doubles as
// the size of an equal-split parallel batch: m simultaneous streams each run
// for m slots.
struct Transmission {
  NodeId sender = kSourceId;
  NodeId receiver = kSourceId;
  long long chunk = 0;
  long long start = 0;
  int duration = 1;

  friend bool operator==(const Transmission&, const Transmission&) = default;
};

// Simulation frame: P peers (ids 1..P) plus the source (id 0), fan-out k,
// upload capacity U. The source generates chunk c at slot (c-1)*U; the
// simulation runs slots 0..horizon-1 and completions land up to slot horizon.
struct SimScenario {
  int U = 1;
  Fanout k = Fanout::finite(2);
  int P = 0;
  long long horizon = 1;
  long long chunk_count = 1;
};

// Everything that happened in one run. completion holds only receptions that
// finished within the horizon; transmissions still in flight at the end are
// listed but never complete.
struct Trace {
  SimScenario scenario;
  std::vector<Transmission> transmissions;
  std::map<std::pair<long long, NodeId>, long long> completion;
};

// Delay metrics. d(c,p) = completion(c,p) - (c-1)*U. A chunk is observed when
// every peer completed it within the horizon; Dp and the N(t) staircase use
// observed chunks only, so a finite horizon never censors them. D_network is
// the least t with N(t) = P, absent when no chunk was observed.
struct Metrics {
  long long chunks_observed = 0;
  std::map<std::pair<long long, NodeId>, long long> d;
  std::map<NodeId, long long> Dp;
  std::vector<long long> N_of_t;  // index t; constant at P past the back
  std::optional<long long> D_network;
};

namespace detail {
class Engine;
}

// Read-only view of the run offered to strategies each slot. A node "has" a
// chunk once its completion slot is <= the current slot (the source: once the
// chunk is generated); it may forward the chunk in that same slot.
class SimState {
 public:
  long long slot() const { return slot_; }
  const SimScenario& scenario() const { return scenario_; }

  bool has(NodeId node, long long chunk) const;
  bool in_flight(NodeId node, long long chunk) const;
  std::optional<long long> completion_slot(NodeId node, long long chunk) const;
  const std::set<NodeId>& receivers_of(NodeId sender) const;

 private:
  friend class detail::Engine;
  explicit SimState(const SimScenario& scenario) : scenario_(scenario) {}

  SimScenario scenario_;
  long long slot_ = 0;
  // Every admitted reception, including ones completing after the horizon.
  std::map<std::pair<long long, NodeId>, long long> arrival_;
  std::map<NodeId, std::set<NodeId>> receivers_;
  std::set<NodeId> no_receivers_;
};

// Per-slot decision procedure. decide() returns the transmissions to launch
// at state.slot(); the engine, not the strategy, is the authority on
// admissibility and aborts the run on any violation.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  // Throws std::invalid_argument when the strategy cannot drive the scenario.
  virtual void validate(const SimScenario& scenario) const = 0;
  virtual std::vector<Transmission> decide(const SimState& state) = 0;
};

// Raised when a strategy emits an inadmissible transmission; the message
// names the violated invariant.
struct SimulationError : std::runtime_error {
  SimulationError(const std::string& what, long long slot_)
      : std::runtime_error(what), slot(slot_) {}
  long long slot;
};

// Runs the strategy slot by slot over the scenario. Deterministic; throws
// SimulationError on the first inadmissible transmission and
// std::invalid_argument on bad scenario parameters.
Trace simulate(Strategy& strategy, const SimScenario& scenario);

// Replays a serialized tree for every chunk with period U: each node serves
// its children one unit-duration transmission per slot, child m of node v
// completing chunk c at (c-1)*U + offset[v] + m.
std::unique_ptr<Strategy> strategy_serial_tree(ScheduledTree tree);

// Routes chunk c down trees[(c-1) mod (k/U)] of the forest, replaying each
// tree's offsets; the whole schedule repeats with period k.
std::unique_ptr<Strategy> strategy_serial_forest(Forest forest);

// Complete k-ary balanced tree (k = U) in heap order: node i serves children
// k*i+1 .. k*i+k as one equal-split batch of duration k, so depth-d nodes
// complete each chunk k*d slots after its generation.
std::unique_ptr<Strategy> strategy_parallel_balanced(int U, int k, int P);

// Unbounded fan-out flooding: the source serially seeds each chunk to U fresh
// peers during that chunk's generation period, and every peer each slot
// relays its oldest chunk that still has fresh targets to the smallest one.
std::unique_ptr<Strategy> strategy_snowball(int U, int P);

// Adversarial probe: every node each slot picks uniformly at random among
// staying idle and every legal unit-duration transmission (store-and-forward,
// no duplicate deliveries, fan-out budget respected), deterministically from
// the seed.
std::unique_ptr<Strategy> strategy_random(int U, Fanout k, int P,
                                          unsigned long long seed);

// Delay metrics of a finished run (see Metrics).
Metrics compute_metrics(const Trace& trace);

// Recomputes per-node per-slot uplink usage from scratch: the sum of
// 1/duration over in-progress transmissions must stay <= 1 everywhere. With
// check_source_period, additionally requires the source to start at most U
// transmissions of chunk c before chunk c+1 is generated. Returns
// human-readable violations; empty means the trace is capacity-clean.
std::vector<std::string> validate_capacity(const Trace& trace, int U,
                                           bool check_source_period = false);

// Peers holding `chunk` within t slots of its generation, for t = 0..max
// observed delay (cumulative staircase; empty when nobody completed it).
std::vector<long long> chunk_diffusion_staircase(const Trace& trace,
                                                 long long chunk);

// Value of a staircase at t: saturates at the last entry, 0 when empty.
long long staircase_at(const std::vector<long long>& staircase, long long t);

// Peers a complete k-ary balanced tree serves within t slots of a chunk's
// generation: sum of k^d over depths d with k*d <= t.
ExactInt parallel_balanced_closed_form(int k, long long t);

// One transmission per line: {"sender","receiver","chunk","start","duration"}.
std::string trace_to_jsonl(const Trace& trace);

// {"chunks_observed", "D_network", "N_of_t", "Dp", "d"} with the maps
// flattened into arrays of objects.
nlohmann::ordered_json metrics_to_json(const Metrics& metrics);

}  // namespace streambound
