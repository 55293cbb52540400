#include "streambound/sim.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include <boost/rational.hpp>

namespace streambound {

bool SimState::has(NodeId node, long long chunk) const {
  if (node == kSourceId) {
    return chunk >= 1 && chunk <= scenario_.chunk_count &&
           (chunk - 1) * scenario_.U <= slot_;
  }
  const auto it = arrival_.find({chunk, node});
  return it != arrival_.end() && it->second <= slot_;
}

bool SimState::in_flight(NodeId node, long long chunk) const {
  const auto it = arrival_.find({chunk, node});
  return it != arrival_.end() && it->second > slot_;
}

std::optional<long long> SimState::completion_slot(NodeId node,
                                                   long long chunk) const {
  if (node == kSourceId) {
    if (chunk < 1 || chunk > scenario_.chunk_count) return std::nullopt;
    return (chunk - 1) * scenario_.U;  // generation slot
  }
  const auto it = arrival_.find({chunk, node});
  if (it == arrival_.end()) return std::nullopt;
  return it->second;
}

const std::set<NodeId>& SimState::receivers_of(NodeId sender) const {
  const auto it = receivers_.find(sender);
  return it == receivers_.end() ? no_receivers_ : it->second;
}

namespace detail {

class Engine {
 public:
  Engine(Strategy& strategy, const SimScenario& scenario)
      : strategy_(strategy), state_(scenario) {}

  Trace run() {
    const SimScenario& sc = state_.scenario_;
    validate_scenario(sc);
    strategy_.validate(sc);
    Trace trace;
    trace.scenario = sc;
    for (long long t = 0; t < sc.horizon; ++t) {
      state_.slot_ = t;
      const std::vector<Transmission> moves = strategy_.decide(state_);
      for (const Transmission& m : moves) {
        admit(m);
        trace.transmissions.push_back(m);
      }
    }
    for (const auto& [key, slot] : state_.arrival_) {
      if (slot <= sc.horizon) trace.completion.emplace(key, slot);
    }
    return trace;
  }

 private:
  static void validate_scenario(const SimScenario& sc) {
    if (sc.U < 1) {
      throw std::invalid_argument("upload capacity U must be >= 1 (got " +
                                  std::to_string(sc.U) + ")");
    }
    if (sc.k.is_finite()) {
      if (sc.k.finite_value() < kMinStepOrder) {
        throw std::invalid_argument("fan-out k must be >= 2 (got " +
                                    sc.k.str() + ")");
      }
      if (sc.k.finite_value() < sc.U) {
        throw std::invalid_argument("fan-out k must be >= U (got k=" +
                                    sc.k.str() + ", U=" + std::to_string(sc.U) +
                                    ")");
      }
    }
    if (sc.P < 0) {
      throw std::invalid_argument("peer count P must be >= 0 (got " +
                                  std::to_string(sc.P) + ")");
    }
    if (sc.horizon < 1) {
      throw std::invalid_argument("horizon must be >= 1 slot (got " +
                                  std::to_string(sc.horizon) + ")");
    }
    if (sc.chunk_count < 1) {
      throw std::invalid_argument("chunk count must be >= 1 (got " +
                                  std::to_string(sc.chunk_count) + ")");
    }
  }

  [[noreturn]] void reject(const std::string& why) const {
    throw SimulationError(
        "slot " + std::to_string(state_.slot_) + ": " + why, state_.slot_);
  }

  void admit(const Transmission& m) {
    const SimScenario& sc = state_.scenario_;
    const long long t = state_.slot_;
    if (m.start != t) reject("transmission must start at the current slot");
    if (m.duration < 1) reject("duration must be >= 1 slot");
    if (m.chunk < 1 || m.chunk > sc.chunk_count) {
      reject("chunk " + std::to_string(m.chunk) + " is outside 1.." +
             std::to_string(sc.chunk_count));
    }
    if (m.sender < 0 || m.sender > sc.P) {
      reject("sender " + std::to_string(m.sender) + " is outside the network");
    }
    if (m.receiver == kSourceId) reject("the source never receives");
    if (m.receiver < 1 || m.receiver > sc.P) {
      reject("receiver " + std::to_string(m.receiver) +
             " is outside the network");
    }
    if (m.receiver == m.sender) {
      reject("node " + std::to_string(m.sender) + " cannot transmit to itself");
    }
    if (m.sender == kSourceId) {
      const long long generated = (m.chunk - 1) * sc.U;
      if (t < generated) {
        reject("store-and-forward violation: chunk " +
               std::to_string(m.chunk) + " is generated at slot " +
               std::to_string(generated));
      }
    } else {
      const auto it = state_.arrival_.find({m.chunk, m.sender});
      if (it == state_.arrival_.end() || it->second > t) {
        reject("store-and-forward violation: node " +
               std::to_string(m.sender) + " has not completed chunk " +
               std::to_string(m.chunk) + " by slot " + std::to_string(t));
      }
    }
    if (const auto it = state_.arrival_.find({m.chunk, m.receiver});
        it != state_.arrival_.end()) {
      reject("duplicate delivery: node " + std::to_string(m.receiver) +
             (it->second <= t ? " already holds chunk "
                              : " is already receiving chunk ") +
             std::to_string(m.chunk));
    }
    auto& receivers = state_.receivers_[m.sender];
    if (sc.k.is_finite() && receivers.count(m.receiver) == 0 &&
        static_cast<int>(receivers.size()) >= sc.k.finite_value()) {
      reject("fan-out violation: node " + std::to_string(m.sender) +
             " already serves k = " + sc.k.str() + " distinct receivers");
    }
    const boost::rational<long long> share(1, m.duration);
    auto& usage = usage_[m.sender];
    for (long long s = t; s < t + m.duration; ++s) {
      if (usage[s] + share > 1) {
        reject("capacity violation: node " + std::to_string(m.sender) +
               " exceeds its unit upload in slot " + std::to_string(s));
      }
    }
    for (long long s = t; s < t + m.duration; ++s) usage[s] += share;
    receivers.insert(m.receiver);
    state_.arrival_.emplace(std::pair(m.chunk, m.receiver), t + m.duration);
  }

  Strategy& strategy_;
  SimState state_;
  std::map<NodeId, std::map<long long, boost::rational<long long>>> usage_;
};

}  // namespace detail

Trace simulate(Strategy& strategy, const SimScenario& scenario) {
  return detail::Engine(strategy, scenario).run();
}

namespace {

// Schedule replay index: transmissions of one tree grouped by start offset.
std::map<int, std::vector<std::pair<NodeId, NodeId>>> edges_by_start(
    const ScheduledTree& t) {
  std::map<int, std::vector<std::pair<NodeId, NodeId>>> by_start;
  for (NodeId v = 0; v <= t.P; ++v) {
    for (NodeId c : t.children_order[static_cast<size_t>(v)]) {
      by_start[t.offset[static_cast<size_t>(c)] - 1].push_back({v, c});
    }
  }
  return by_start;
}

class SerialTreeStrategy final : public Strategy {
 public:
  explicit SerialTreeStrategy(ScheduledTree tree)
      : tree_(std::move(tree)), by_start_(edges_by_start(tree_)) {
    max_start_ = by_start_.empty() ? -1 : by_start_.rbegin()->first;
  }

  std::string name() const override { return "serial-tree"; }

  void validate(const SimScenario& sc) const override {
    if (sc.P != tree_.P) {
      throw std::invalid_argument(
          "serial tree covers P = " + std::to_string(tree_.P) +
          " peers but the scenario has P = " + std::to_string(sc.P));
    }
    if (sc.U != tree_.U || !sc.k.is_finite() ||
        sc.k.finite_value() != tree_.k) {
      throw std::invalid_argument(
          "the single serialized tree runs only at k = U = " +
          std::to_string(tree_.U));
    }
  }

  std::vector<Transmission> decide(const SimState& state) override {
    const SimScenario& sc = state.scenario();
    const long long t = state.slot();
    std::vector<Transmission> out;
    for (long long c = 1; c <= sc.chunk_count; ++c) {
      const long long s = t - (c - 1) * sc.U;
      if (s < 0) break;  // later chunks are generated later still
      if (s > max_start_) continue;
      const auto it = by_start_.find(static_cast<int>(s));
      if (it == by_start_.end()) continue;
      for (const auto& [v, w] : it->second) out.push_back({v, w, c, t, 1});
    }
    return out;
  }

 private:
  ScheduledTree tree_;
  std::map<int, std::vector<std::pair<NodeId, NodeId>>> by_start_;
  int max_start_ = -1;
};

class SerialForestStrategy final : public Strategy {
 public:
  explicit SerialForestStrategy(Forest forest) : forest_(std::move(forest)) {
    max_start_ = -1;
    for (const ScheduledTree& t : forest_.trees) {
      by_start_.push_back(edges_by_start(t));
      if (!by_start_.back().empty()) {
        max_start_ = std::max(max_start_, by_start_.back().rbegin()->first);
      }
    }
  }

  std::string name() const override { return "serial-forest"; }

  void validate(const SimScenario& sc) const override {
    if (sc.P != forest_.P) {
      throw std::invalid_argument(
          "forest covers P = " + std::to_string(forest_.P) +
          " peers but the scenario has P = " + std::to_string(sc.P));
    }
    if (sc.U != forest_.U || !sc.k.is_finite() ||
        sc.k.finite_value() != forest_.k) {
      throw std::invalid_argument("forest was built for U = " +
                                  std::to_string(forest_.U) +
                                  ", k = " + std::to_string(forest_.k));
    }
    if (forest_.tree_count() != forest_.k / forest_.U) {
      throw std::invalid_argument("forest must hold k/U trees");
    }
  }

  std::vector<Transmission> decide(const SimState& state) override {
    const SimScenario& sc = state.scenario();
    const long long t = state.slot();
    std::vector<Transmission> out;
    for (long long c = 1; c <= sc.chunk_count; ++c) {
      const long long s = t - (c - 1) * sc.U;
      if (s < 0) break;
      if (s > max_start_) continue;
      const auto& by_start =
          by_start_[static_cast<size_t>(forest_.tree_of_chunk(c))];
      const auto it = by_start.find(static_cast<int>(s));
      if (it == by_start.end()) continue;
      for (const auto& [v, w] : it->second) out.push_back({v, w, c, t, 1});
    }
    return out;
  }

 private:
  Forest forest_;
  std::vector<std::map<int, std::vector<std::pair<NodeId, NodeId>>>> by_start_;
  int max_start_ = -1;
};

class ParallelBalancedStrategy final : public Strategy {
 public:
  ParallelBalancedStrategy(int U, int k, int P) : U_(U), k_(k), P_(P) {
    if (k != U || U < kMinStepOrder) {
      throw std::invalid_argument(
          "the parallel balanced tree requires k = U >= 2");
    }
    if (P < 0) throw std::invalid_argument("peer count P must be >= 0");
    std::vector<NodeId> level{kSourceId};
    while (!level.empty()) {
      std::vector<NodeId> next;
      for (NodeId v : level) {
        for (int j = 1; j <= k_; ++j) {
          const long long child = static_cast<long long>(k_) * v + j;
          if (child <= P_) next.push_back(static_cast<NodeId>(child));
        }
      }
      nodes_by_depth_.push_back(std::move(level));
      level = std::move(next);
    }
  }

  std::string name() const override { return "parallel-balanced"; }

  void validate(const SimScenario& sc) const override {
    if (sc.P != P_ || sc.U != U_ || !sc.k.is_finite() ||
        sc.k.finite_value() != k_) {
      throw std::invalid_argument(
          "the parallel balanced tree was built for U = k = " +
          std::to_string(k_) + ", P = " + std::to_string(P_));
    }
  }

  std::vector<Transmission> decide(const SimState& state) override {
    const SimScenario& sc = state.scenario();
    const long long t = state.slot();
    std::vector<Transmission> out;
    for (long long c = 1; c <= sc.chunk_count; ++c) {
      const long long s = t - (c - 1) * U_;
      if (s < 0) break;
      if (s % k_ != 0) continue;
      const long long depth = s / k_;
      if (depth >= static_cast<long long>(nodes_by_depth_.size())) continue;
      for (NodeId v : nodes_by_depth_[static_cast<size_t>(depth)]) {
        for (int j = 1; j <= k_; ++j) {
          const long long child = static_cast<long long>(k_) * v + j;
          if (child > P_) break;
          out.push_back({v, static_cast<NodeId>(child), c, t, k_});
        }
      }
    }
    return out;
  }

 private:
  int U_;
  int k_;
  int P_;
  std::vector<std::vector<NodeId>> nodes_by_depth_;
};

class SnowballStrategy final : public Strategy {
 public:
  SnowballStrategy(int U, int P) : U_(U), P_(P) {
    if (U < 1) throw std::invalid_argument("upload capacity U must be >= 1");
    if (P < 0) throw std::invalid_argument("peer count P must be >= 0");
  }

  std::string name() const override { return "snowball"; }

  void validate(const SimScenario& sc) const override {
    if (!sc.k.is_unbounded()) {
      throw std::invalid_argument(
          "snowball needs unbounded neighbor lists (k = inf)");
    }
    if (sc.U != U_ || sc.P != P_) {
      throw std::invalid_argument("snowball was built for U = " +
                                  std::to_string(U_) +
                                  ", P = " + std::to_string(P_));
    }
  }

  std::vector<Transmission> decide(const SimState& state) override {
    const long long t = state.slot();
    settle_completions(t);
    std::vector<Transmission> out;
    // The source spends each slot of chunk c's generation period seeding it.
    const long long current = t / U_ + 1;
    if (current <= state.scenario().chunk_count) {
      emit_to_smallest_fresh(kSourceId, current, t, out);
    }
    for (NodeId p : active_) {
      for (long long c : held_[p]) {  // oldest chunk first
        if (emit_to_smallest_fresh(p, c, t, out)) break;
      }
    }
    return out;
  }

 private:
  void settle_completions(long long t) {
    while (!pending_.empty() && pending_.begin()->first <= t) {
      for (const auto& [node, chunk] : pending_.begin()->second) {
        held_[node].insert(chunk);
        active_.insert(node);
      }
      pending_.erase(pending_.begin());
    }
  }

  std::set<NodeId>& fresh_set(long long chunk) {
    const auto it = fresh_.find(chunk);
    if (it != fresh_.end()) return it->second;
    auto& fresh = fresh_[chunk];
    for (NodeId p = 1; p <= P_; ++p) fresh.insert(fresh.end(), p);
    return fresh;
  }

  bool emit_to_smallest_fresh(NodeId sender, long long chunk, long long t,
                              std::vector<Transmission>& out) {
    auto& fresh = fresh_set(chunk);
    if (fresh.empty()) return false;
    const NodeId target = *fresh.begin();
    fresh.erase(fresh.begin());
    out.push_back({sender, target, chunk, t, 1});
    pending_[t + 1].push_back({target, chunk});
    return true;
  }

  int U_;
  int P_;
  std::map<long long, std::set<NodeId>> fresh_;  // lacking and not in flight
  std::map<NodeId, std::set<long long>> held_;
  std::set<NodeId> active_;
  std::map<long long, std::vector<std::pair<NodeId, long long>>> pending_;
};

class RandomStrategy final : public Strategy {
 public:
  RandomStrategy(int U, Fanout k, int P, unsigned long long seed)
      : U_(U), k_(k), P_(P), rng_(seed) {
    if (U < 1) throw std::invalid_argument("upload capacity U must be >= 1");
    if (P < 0) throw std::invalid_argument("peer count P must be >= 0");
  }

  std::string name() const override { return "random"; }

  void validate(const SimScenario& sc) const override {
    if (sc.U != U_ || !(sc.k == k_) || sc.P != P_) {
      throw std::invalid_argument("random strategy was built for U = " +
                                  std::to_string(U_) + ", k = " + k_.str() +
                                  ", P = " + std::to_string(P_));
    }
  }

  std::vector<Transmission> decide(const SimState& state) override {
    const long long t = state.slot();
    const long long chunk_count = state.scenario().chunk_count;
    settle_completions(t);
    std::vector<Transmission> out;
    for (NodeId s = 0; s <= P_; ++s) {
      const bool budget_left =
          k_.is_unbounded() ||
          static_cast<int>(receivers_[s].size()) < k_.finite_value();
      // Count the legal (chunk, receiver) moves without materializing them.
      counts_.clear();
      long long total = 0;
      auto tally = [&](long long c) {
        const std::set<NodeId>& lacking = lacking_set(c);
        long long n = 0;
        if (budget_left) {
          n = static_cast<long long>(lacking.size());
        } else {
          for (NodeId w : receivers_[s]) n += lacking.count(w);
        }
        if (n > 0) {
          counts_.push_back({c, n});
          total += n;
        }
      };
      if (s == kSourceId) {
        const long long generated = std::min(chunk_count, t / U_ + 1);
        for (long long c = 1; c <= generated; ++c) tally(c);
      } else {
        for (long long c : held_[s]) tally(c);
      }
      if (total == 0) continue;  // idle is forced; spend no randomness
      // Uniform over {idle} and the `total` legal moves. The modulo bias over
      // a 64-bit draw is immaterial at these move counts.
      const unsigned long long draw =
          rng_() % static_cast<unsigned long long>(total + 1);
      if (draw == 0) continue;
      long long index = static_cast<long long>(draw) - 1;
      for (const auto& [c, n] : counts_) {
        if (index >= n) {
          index -= n;
          continue;
        }
        const std::set<NodeId>& lacking = lacking_set(c);
        NodeId target = kNoParent;
        if (budget_left) {
          auto it = lacking.begin();
          std::advance(it, index);
          target = *it;
        } else {
          for (NodeId w : receivers_[s]) {
            if (lacking.count(w) && index-- == 0) {
              target = w;
              break;
            }
          }
        }
        out.push_back({s, target, c, t, 1});
        lacking_[c].erase(target);
        receivers_[s].insert(target);
        pending_[t + 1].push_back({target, c});
        break;
      }
    }
    return out;
  }

 private:
  void settle_completions(long long t) {
    while (!pending_.empty() && pending_.begin()->first <= t) {
      for (const auto& [node, chunk] : pending_.begin()->second) {
        held_[node].insert(chunk);
      }
      pending_.erase(pending_.begin());
    }
  }

  std::set<NodeId>& lacking_set(long long chunk) {
    const auto it = lacking_.find(chunk);
    if (it != lacking_.end()) return it->second;
    auto& lacking = lacking_[chunk];
    for (NodeId p = 1; p <= P_; ++p) lacking.insert(lacking.end(), p);
    return lacking;
  }

  int U_;
  Fanout k_;
  int P_;
  std::mt19937_64 rng_;
  std::map<long long, std::set<NodeId>> lacking_;  // not completed, not in flight
  std::map<NodeId, std::set<long long>> held_;
  std::map<NodeId, std::set<NodeId>> receivers_;
  std::map<long long, std::vector<std::pair<NodeId, long long>>> pending_;
  std::vector<std::pair<long long, long long>> counts_;
};

}  // namespace

std::unique_ptr<Strategy> strategy_serial_tree(ScheduledTree tree) {
  return std::make_unique<SerialTreeStrategy>(std::move(tree));
}

std::unique_ptr<Strategy> strategy_serial_forest(Forest forest) {
  return std::make_unique<SerialForestStrategy>(std::move(forest));
}

std::unique_ptr<Strategy> strategy_parallel_balanced(int U, int k, int P) {
  return std::make_unique<ParallelBalancedStrategy>(U, k, P);
}

std::unique_ptr<Strategy> strategy_snowball(int U, int P) {
  return std::make_unique<SnowballStrategy>(U, P);
}

std::unique_ptr<Strategy> strategy_random(int U, Fanout k, int P,
                                          unsigned long long seed) {
  return std::make_unique<RandomStrategy>(U, k, P, seed);
}

Metrics compute_metrics(const Trace& trace) {
  const SimScenario& sc = trace.scenario;
  Metrics m;
  std::map<long long, long long> completed_count;
  for (const auto& [key, slot] : trace.completion) {
    m.d.emplace(key, slot - (key.first - 1) * sc.U);
    ++completed_count[key.first];
  }
  std::vector<long long> observed;
  for (long long c = 1; c <= sc.chunk_count; ++c) {
    const auto it = completed_count.find(c);
    const long long done = it == completed_count.end() ? 0 : it->second;
    if (done == sc.P) observed.push_back(c);  // P = 0: trivially observed
  }
  m.chunks_observed = static_cast<long long>(observed.size());
  if (sc.P == 0) {
    m.N_of_t = {0};
    m.D_network = 0;
    return m;
  }
  if (observed.empty()) {
    m.N_of_t = {0};
    return m;  // D_network stays "not reached"
  }
  long long worst = 0;
  for (NodeId p = 1; p <= sc.P; ++p) {
    long long dp = 0;
    for (long long c : observed) dp = std::max(dp, m.d.at({c, p}));
    m.Dp[p] = dp;
    worst = std::max(worst, dp);
  }
  m.N_of_t.assign(static_cast<size_t>(worst) + 1, 0);
  for (const auto& [p, dp] : m.Dp) ++m.N_of_t[static_cast<size_t>(dp)];
  long long running = 0;
  for (long long& n : m.N_of_t) {
    running += n;
    n = running;
  }
  m.D_network = worst;  // the staircase reaches P exactly at the worst D(p)
  return m;
}

std::vector<std::string> validate_capacity(const Trace& trace, int U,
                                           bool check_source_period) {
  std::vector<std::string> out;
  if (U < 1) {
    out.push_back("upload capacity U must be >= 1");
    return out;
  }
  std::map<NodeId, std::map<long long, boost::rational<long long>>> usage;
  for (const Transmission& m : trace.transmissions) {
    if (m.duration < 1) {
      out.push_back("transmission from node " + std::to_string(m.sender) +
                    " at slot " + std::to_string(m.start) +
                    " has non-positive duration");
      continue;
    }
    const boost::rational<long long> share(1, m.duration);
    auto& slots = usage[m.sender];
    for (long long s = m.start; s < m.start + m.duration; ++s) {
      slots[s] += share;
    }
  }
  for (const auto& [node, slots] : usage) {
    for (const auto& [slot, used] : slots) {
      if (used > 1) {
        out.push_back("node " + std::to_string(node) +
                      " exceeds its unit upload in slot " +
                      std::to_string(slot) + " (usage " +
                      std::to_string(used.numerator()) + "/" +
                      std::to_string(used.denominator()) + ")");
      }
    }
  }
  if (check_source_period) {
    std::map<long long, long long> window_starts;
    for (const Transmission& m : trace.transmissions) {
      if (m.sender != kSourceId) continue;
      const long long generated = (m.chunk - 1) * U;
      if (m.start < generated) {
        out.push_back("source transmits chunk " + std::to_string(m.chunk) +
                      " at slot " + std::to_string(m.start) +
                      " before its generation at slot " +
                      std::to_string(generated));
      } else if (m.start < generated + U) {
        ++window_starts[m.chunk];
      }
    }
    for (const auto& [chunk, n] : window_starts) {
      if (n > U) {
        out.push_back("source starts " + std::to_string(n) +
                      " transmissions of chunk " + std::to_string(chunk) +
                      " within its " + std::to_string(U) + "-slot period");
      }
    }
  }
  return out;
}

std::vector<long long> chunk_diffusion_staircase(const Trace& trace,
                                                 long long chunk) {
  const long long generated = (chunk - 1) * trace.scenario.U;
  std::vector<long long> delays;
  for (const auto& [key, slot] : trace.completion) {
    if (key.first == chunk) delays.push_back(slot - generated);
  }
  if (delays.empty()) return {};
  const long long worst = *std::max_element(delays.begin(), delays.end());
  std::vector<long long> staircase(static_cast<size_t>(worst) + 1, 0);
  for (long long d : delays) ++staircase[static_cast<size_t>(d)];
  long long running = 0;
  for (long long& n : staircase) {
    running += n;
    n = running;
  }
  return staircase;
}

long long staircase_at(const std::vector<long long>& staircase, long long t) {
  if (staircase.empty() || t < 0) return 0;
  const size_t i = std::min<size_t>(static_cast<size_t>(t), staircase.size() - 1);
  return staircase[i];
}

ExactInt parallel_balanced_closed_form(int k, long long t) {
  if (k < kMinStepOrder) {
    throw std::invalid_argument("fan-out k must be >= 2 (got " +
                                std::to_string(k) + ")");
  }
  ExactInt total = 0;
  ExactInt level = 1;
  for (long long depth = 1; depth * k <= t; ++depth) {
    level *= k;
    total += level;
  }
  return total;
}

std::string trace_to_jsonl(const Trace& trace) {
  std::string out;
  for (const Transmission& m : trace.transmissions) {
    nlohmann::ordered_json j;
    j["sender"] = m.sender;
    j["receiver"] = m.receiver;
    j["chunk"] = m.chunk;
    j["start"] = m.start;
    j["duration"] = m.duration;
    out += j.dump();
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json metrics_to_json(const Metrics& metrics) {
  nlohmann::ordered_json j;
  j["chunks_observed"] = metrics.chunks_observed;
  if (metrics.D_network.has_value()) {
    j["D_network"] = *metrics.D_network;
  } else {
    j["D_network"] = "not reached";
  }
  j["N_of_t"] = metrics.N_of_t;
  j["Dp"] = nlohmann::ordered_json::array();
  for (const auto& [node, delay] : metrics.Dp) {
    j["Dp"].push_back({{"node", node}, {"delay", delay}});
  }
  j["d"] = nlohmann::ordered_json::array();
  for (const auto& [key, delay] : metrics.d) {
    j["d"].push_back(
        {{"chunk", key.first}, {"node", key.second}, {"delay", delay}});
  }
  return j;
}

}  // namespace streambound
