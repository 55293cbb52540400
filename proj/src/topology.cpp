#include "streambound/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <utility>

namespace streambound {

namespace {

void require_positive_network(int P) {
  if (P < 1) {
    throw std::invalid_argument("network size P must be >= 1 (got " +
                                std::to_string(P) + ")");
  }
}

// Shared greedy: repeatedly the eligible sender with the smallest next-free
// completion offset (ties: smallest id) adopts the next node id in sequence.
ScheduledTree greedy_tree(int source_cap, int interior_cap, int P) {
  ScheduledTree t;
  t.U = source_cap;
  t.k = interior_cap;
  t.P = P;
  t.parent.assign(static_cast<size_t>(P) + 1, kNoParent);
  t.offset.assign(static_cast<size_t>(P) + 1, 0);
  t.children_order.assign(static_cast<size_t>(P) + 1, {});

  using Entry = std::pair<int, NodeId>;  // (next completion offset, sender)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
  frontier.push({1, kSourceId});
  for (NodeId child = 1; child <= P; ++child) {
    const auto [completes, sender] = frontier.top();
    frontier.pop();
    t.parent[child] = sender;
    t.offset[child] = completes;
    t.children_order[sender].push_back(child);
    frontier.push({completes + 1, child});
    const int cap = sender == kSourceId ? source_cap : interior_cap;
    if (static_cast<int>(t.children_order[sender].size()) < cap) {
      frontier.push({completes + 1, sender});
    }
  }
  return t;
}

void require_forest_params(int U, int k) {
  if (U < 1) {
    throw std::invalid_argument("upload capacity U must be >= 1 (got " +
                                std::to_string(U) + ")");
  }
  if (k < kMinStepOrder) {
    throw std::invalid_argument("fan-out k must be >= 2 (got " +
                                std::to_string(k) + ")");
  }
  if (k <= U) {
    throw std::invalid_argument(
        "forest construction requires k > U (got k=" + std::to_string(k) +
        ", U=" + std::to_string(U) + "); use the single tree when k = U");
  }
  if (k % U != 0) {
    throw std::invalid_argument("fan-out k must be a multiple of U (got k=" +
                                std::to_string(k) + ", U=" +
                                std::to_string(U) + ")");
  }
}

// Start offsets (completion offset - 1) of the serial transmissions a node at
// this structural position performs, one per child.
std::vector<int> start_offsets(const ScheduledTree& t, NodeId pos) {
  std::vector<int> starts;
  starts.reserve(t.children_order[static_cast<size_t>(pos)].size());
  for (NodeId child : t.children_order[static_cast<size_t>(pos)]) {
    starts.push_back(t.offset[static_cast<size_t>(child)] - 1);
  }
  return starts;
}

// Per-tree structural audit shared by validate_forest and forest_from_json.
void append_tree_violations(const ScheduledTree& t, int tree_index,
                            std::vector<std::string>& out) {
  const std::string tag = "tree " + std::to_string(tree_index) + ": ";
  const size_t n = static_cast<size_t>(t.P) + 1;
  if (t.parent.size() != n || t.offset.size() != n ||
      t.children_order.size() != n) {
    out.push_back(tag + "node arrays do not match P = " + std::to_string(t.P));
    return;
  }
  if (t.parent[kSourceId] != kNoParent || t.offset[kSourceId] != 0) {
    out.push_back(tag + "source must have no parent and offset 0");
  }
  for (NodeId v = 1; v <= t.P; ++v) {
    const size_t vi = static_cast<size_t>(v);
    const NodeId p = t.parent[vi];
    if (p < 0 || p > t.P) {
      out.push_back(tag + "node " + std::to_string(v) + " has no parent");
      continue;
    }
    if (p == v) {
      out.push_back(tag + "node " + std::to_string(v) + " is its own parent");
      continue;
    }
    const auto& siblings = t.children_order[static_cast<size_t>(p)];
    const auto it = std::find(siblings.begin(), siblings.end(), v);
    if (it == siblings.end()) {
      out.push_back(tag + "node " + std::to_string(v) +
                    " missing from its parent's serial children");
      continue;
    }
    const int m = static_cast<int>(it - siblings.begin()) + 1;
    if (t.offset[vi] != t.offset[static_cast<size_t>(p)] + m) {
      out.push_back(tag + "node " + std::to_string(v) +
                    " violates the serial offset rule (offset " +
                    std::to_string(t.offset[vi]) + ", expected parent offset " +
                    std::to_string(t.offset[static_cast<size_t>(p)]) + " + " +
                    std::to_string(m) + ")");
    }
  }
  for (NodeId v = 0; v <= t.P; ++v) {
    const auto& children = t.children_order[static_cast<size_t>(v)];
    const int cap = v == kSourceId ? t.U : t.k;
    if (static_cast<int>(children.size()) > cap) {
      out.push_back(tag + "node " + std::to_string(v) + " has " +
                    std::to_string(children.size()) +
                    " children, exceeding its budget of " +
                    std::to_string(cap));
    }
    for (NodeId c : children) {
      if (c < 1 || c > t.P) {
        out.push_back(tag + "node " + std::to_string(v) +
                      " lists an out-of-range child");
      } else if (t.parent[static_cast<size_t>(c)] != v) {
        out.push_back(tag + "node " + std::to_string(c) +
                      " is listed as a child of node " + std::to_string(v) +
                      " but points to another parent");
      }
    }
  }
}

}  // namespace

ScheduledTree build_single_tree(int U, int P) {
  if (U < kMinStepOrder) {
    throw std::invalid_argument(
        "single-tree construction requires U = k >= 2 (got U=" +
        std::to_string(U) + ")");
  }
  require_positive_network(P);
  return greedy_tree(U, U, P);
}

ScheduledTree build_tree_shape(int U, int k, int P) {
  require_forest_params(U, k);
  require_positive_network(P);
  return greedy_tree(U, k, P);
}

std::vector<SlotConflict> check_slot_conflicts(const Forest& f) {
  std::vector<SlotConflict> conflicts;
  for (NodeId v = 0; v <= f.P; ++v) {
    std::map<int, std::vector<int>> trees_by_residue;
    for (int tau = 0; tau < f.tree_count(); ++tau) {
      for (int start : start_offsets(f.trees[static_cast<size_t>(tau)], v)) {
        const int residue = (tau * f.U + start) % f.k;
        trees_by_residue[residue].push_back(tau);
      }
    }
    for (const auto& [residue, taus] : trees_by_residue) {
      if (taus.size() > 1) conflicts.push_back({v, residue, taus});
    }
  }
  return conflicts;
}

std::vector<std::string> validate_forest(const Forest& f) {
  std::vector<std::string> out;
  if (f.U < 1 || f.k < kMinStepOrder || f.k % f.U != 0) {
    out.push_back("forest parameters must satisfy U >= 1, k >= 2, U | k");
    return out;
  }
  if (f.tree_count() != f.k / f.U) {
    out.push_back("forest must hold k/U = " + std::to_string(f.k / f.U) +
                  " trees (got " + std::to_string(f.tree_count()) + ")");
    return out;
  }
  for (int tau = 0; tau < f.tree_count(); ++tau) {
    const ScheduledTree& t = f.trees[static_cast<size_t>(tau)];
    if (t.P != f.P) {
      out.push_back("tree " + std::to_string(tau) +
                    " covers a different node universe");
      continue;
    }
    append_tree_violations(t, tau, out);
  }
  if (!out.empty()) return out;  // structural damage voids the later checks

  for (NodeId v = 0; v <= f.P; ++v) {
    std::set<NodeId> distinct_children;
    for (const ScheduledTree& t : f.trees) {
      const auto& children = t.children_order[static_cast<size_t>(v)];
      distinct_children.insert(children.begin(), children.end());
    }
    if (static_cast<int>(distinct_children.size()) > f.k) {
      out.push_back("node " + std::to_string(v) + " serves " +
                    std::to_string(distinct_children.size()) +
                    " distinct children across trees, exceeding k = " +
                    std::to_string(f.k));
    }
  }
  for (const SlotConflict& c : check_slot_conflicts(f)) {
    out.push_back("node " + std::to_string(c.node) +
                  " transmits twice at start residue " +
                  std::to_string(c.residue) + " mod " + std::to_string(f.k));
  }
  return out;
}

namespace {

// Backtracking state for the intertwining search. Tree 0 is the identity
// placement of the shape; trees 1..n-1 are searched position by position.
class IntertwineSolver {
 public:
  IntertwineSolver(int U, int k, int P, const IntertwineOptions& opts)
      : U_(U), k_(k), P_(P), opts_(opts), shape_(build_tree_shape(U, k, P)) {
    n_trees_ = k_ / U_;
    // Positions in (offset, id) order; parents always precede children.
    for (NodeId p = 1; p <= P_; ++p) position_order_.push_back(p);
    std::sort(position_order_.begin(), position_order_.end(),
              [&](NodeId a, NodeId b) {
                return std::pair(shape_.offset[static_cast<size_t>(a)], a) <
                       std::pair(shape_.offset[static_cast<size_t>(b)], b);
              });
    starts_.assign(static_cast<size_t>(P_) + 1, {});
    for (NodeId p = 0; p <= P_; ++p) starts_[static_cast<size_t>(p)] = start_offsets(shape_, p);

    place_.assign(static_cast<size_t>(n_trees_),
                  std::vector<NodeId>(static_cast<size_t>(P_) + 1, kNoParent));
    used_.assign(static_cast<size_t>(n_trees_),
                 std::vector<char>(static_cast<size_t>(P_) + 1, 0));
    residue_used_.assign(static_cast<size_t>(P_) + 1,
                         std::vector<char>(static_cast<size_t>(k_), 0));
    child_multiplicity_.assign(static_cast<size_t>(P_) + 1, {});

    // Tree 0: identity placement, residues and children unions preloaded.
    place_[0][0] = kSourceId;
    for (NodeId p = 0; p <= P_; ++p) {
      if (p > 0) {
        place_[0][static_cast<size_t>(p)] = p;
        used_[0][static_cast<size_t>(p)] = 1;
      }
      for (int s : starts_[static_cast<size_t>(p)]) {
        residue_used_[static_cast<size_t>(p)][static_cast<size_t>(s % k_)] = 1;
      }
      for (NodeId c : shape_.children_order[static_cast<size_t>(p)]) {
        child_multiplicity_[static_cast<size_t>(p)][c] += 1;
      }
    }
    for (int tau = 1; tau < n_trees_; ++tau) place_[static_cast<size_t>(tau)][0] = kSourceId;
  }

  IntertwineAssignment run() {
    IntertwineAssignment result;
    if (!prescreen_pins(result)) {
      result.status = SolveStatus::infeasible;
      return result;
    }
    aborted_ = false;
    const bool solved = search(0);
    result.expanded = expanded_;
    result.backtracks = backtracks_;
    result.diagnostics = std::move(diagnostics_);
    if (solved) {
      result.status = SolveStatus::solved;
      result.placements.assign(place_.begin() + 1, place_.end());
      result.forest = assemble_forest();
    } else if (aborted_) {
      result.status = SolveStatus::aborted;
      result.diagnostics.push_back(
          "search aborted at the expansion cap of " +
          std::to_string(opts_.expansion_cap) + " placements");
    } else {
      result.status = SolveStatus::infeasible;
      result.diagnostics.push_back(
          "search exhausted every placement: no conflict-free intertwining at "
          "this network size");
    }
    return result;
  }

 private:
  // Residues a node transmitting from `pos` in tree `tau` occupies.
  int residue_of(int tau, int start) const { return (tau * U_ + start) % k_; }

  // Validates forced placements against what is already fixed before the
  // search: argument ranges, duplicate pins, clashes with tree-0 residues and
  // other pins of the same node, and fan-out where the parent occupant is
  // already determined (the source, or itself pinned).
  bool prescreen_pins(IntertwineAssignment& result) {
    bool ok = true;
    for (const ForcedPlacement& fp : opts_.forced) {
      std::string why;
      if (fp.tree < 1 || fp.tree >= n_trees_) {
        why = "tree index out of range (trees 1.." +
              std::to_string(n_trees_ - 1) + " can be forced)";
      } else if (fp.position < 1 || fp.position > P_ || fp.node < 1 ||
                 fp.node > P_) {
        why = "position and node must be in 1.." + std::to_string(P_);
      } else if (pinned_.count({fp.tree, fp.position})) {
        why = "position already forced";
      } else if (used_[static_cast<size_t>(fp.tree)][static_cast<size_t>(fp.node)]) {
        why = "node already forced elsewhere in this tree";
      } else {
        for (int s : starts_[static_cast<size_t>(fp.position)]) {
          const int r = residue_of(fp.tree, s);
          if (residue_used_[static_cast<size_t>(fp.node)][static_cast<size_t>(r)]) {
            why = "start-slot residue " + std::to_string(r) + " mod " +
                  std::to_string(k_) + " is already used by node " +
                  std::to_string(fp.node) + "'s other transmissions";
            break;
          }
        }
      }
      if (why.empty()) {
        // Fan-out, when the parent's occupant is already known.
        const NodeId parent_pos = shape_.parent[static_cast<size_t>(fp.position)];
        NodeId parent_occupant = kNoParent;
        if (parent_pos == kSourceId) {
          parent_occupant = kSourceId;
        } else if (auto it = pinned_.find({fp.tree, parent_pos});
                   it != pinned_.end()) {
          parent_occupant = it->second;
        }
        if (parent_occupant != kNoParent) {
          const auto& kids = child_multiplicity_[static_cast<size_t>(parent_occupant)];
          if (!kids.count(fp.node) && static_cast<int>(kids.size()) >= k_) {
            why = "parent occupant " + std::to_string(parent_occupant) +
                  " already serves k = " + std::to_string(k_) +
                  " distinct children";
          }
          if (parent_occupant == fp.node) why = "node would be its own parent";
        }
      }
      if (!why.empty()) {
        result.diagnostics.push_back(
            "forced placement of node " + std::to_string(fp.node) +
            " at position " + std::to_string(fp.position) + " in tree " +
            std::to_string(fp.tree) + " rejected: " + why);
        ok = false;
        continue;
      }
      // Commit the pin's residues so later pins of the same node are screened
      // against it; the placement itself happens during the search.
      for (int s : starts_[static_cast<size_t>(fp.position)]) {
        residue_used_[static_cast<size_t>(fp.node)]
                     [static_cast<size_t>(residue_of(fp.tree, s))] = 1;
      }
      pinned_[{fp.tree, fp.position}] = fp.node;
      used_[static_cast<size_t>(fp.tree)][static_cast<size_t>(fp.node)] = 1;
    }
    // Undo the bookkeeping: the search re-places pins through try_place.
    for (const auto& [slot, node] : pinned_) {
      used_[static_cast<size_t>(slot.first)][static_cast<size_t>(node)] = 0;
      for (int s : starts_[static_cast<size_t>(slot.second)]) {
        residue_used_[static_cast<size_t>(node)]
                     [static_cast<size_t>(residue_of(slot.first, s))] = 0;
      }
    }
    return ok;
  }

  bool try_place(int tau, NodeId pos, NodeId v) {
    auto& used = used_[static_cast<size_t>(tau)];
    if (used[static_cast<size_t>(v)]) return false;
    const NodeId parent_occupant =
        place_[static_cast<size_t>(tau)]
              [static_cast<size_t>(shape_.parent[static_cast<size_t>(pos)])];
    if (parent_occupant == v) return false;
    auto& residues = residue_used_[static_cast<size_t>(v)];
    const auto& starts = starts_[static_cast<size_t>(pos)];
    for (int s : starts) {
      if (residues[static_cast<size_t>(residue_of(tau, s))]) return false;
    }
    auto& siblings = child_multiplicity_[static_cast<size_t>(parent_occupant)];
    const auto it = siblings.find(v);
    if (it == siblings.end() && static_cast<int>(siblings.size()) >= k_) {
      return false;
    }
    // Commit.
    used[static_cast<size_t>(v)] = 1;
    place_[static_cast<size_t>(tau)][static_cast<size_t>(pos)] = v;
    for (int s : starts) residues[static_cast<size_t>(residue_of(tau, s))] = 1;
    siblings[v] += 1;
    ++expanded_;
    return true;
  }

  void undo_place(int tau, NodeId pos, NodeId v) {
    used_[static_cast<size_t>(tau)][static_cast<size_t>(v)] = 0;
    place_[static_cast<size_t>(tau)][static_cast<size_t>(pos)] = kNoParent;
    for (int s : starts_[static_cast<size_t>(pos)]) {
      residue_used_[static_cast<size_t>(v)]
                   [static_cast<size_t>(residue_of(tau, s))] = 0;
    }
    const NodeId parent_occupant =
        place_[static_cast<size_t>(tau)]
              [static_cast<size_t>(shape_.parent[static_cast<size_t>(pos)])];
    auto& siblings = child_multiplicity_[static_cast<size_t>(parent_occupant)];
    if (--siblings[v] == 0) siblings.erase(v);
    ++backtracks_;
  }

  // Flattened slot index: tree 1 positions first, then tree 2, and so on.
  bool search(size_t slot) {
    const size_t total = static_cast<size_t>(n_trees_ - 1) * position_order_.size();
    if (slot == total) return true;
    const int tau = 1 + static_cast<int>(slot / position_order_.size());
    const NodeId pos = position_order_[slot % position_order_.size()];
    if (const auto it = pinned_.find({tau, pos}); it != pinned_.end()) {
      if (expanded_ >= opts_.expansion_cap) {
        aborted_ = true;
        return false;
      }
      if (!try_place(tau, pos, it->second)) return false;
      if (search(slot + 1)) return true;
      undo_place(tau, pos, it->second);
      return false;
    }
    for (NodeId v = 1; v <= P_; ++v) {
      if (expanded_ >= opts_.expansion_cap) {
        aborted_ = true;
        return false;
      }
      if (!try_place(tau, pos, v)) continue;
      if (search(slot + 1)) return true;
      undo_place(tau, pos, v);
      if (aborted_) return false;
    }
    return false;
  }

  Forest assemble_forest() const {
    Forest f;
    f.U = U_;
    f.k = k_;
    f.P = P_;
    f.trees.push_back(shape_);
    for (int tau = 1; tau < n_trees_; ++tau) {
      const auto& place = place_[static_cast<size_t>(tau)];
      ScheduledTree t;
      t.U = shape_.U;
      t.k = shape_.k;
      t.P = P_;
      t.parent.assign(static_cast<size_t>(P_) + 1, kNoParent);
      t.offset.assign(static_cast<size_t>(P_) + 1, 0);
      t.children_order.assign(static_cast<size_t>(P_) + 1, {});
      for (NodeId pos = 0; pos <= P_; ++pos) {
        const NodeId w = pos == kSourceId ? kSourceId : place[static_cast<size_t>(pos)];
        t.offset[static_cast<size_t>(w)] = shape_.offset[static_cast<size_t>(pos)];
        for (NodeId c : shape_.children_order[static_cast<size_t>(pos)]) {
          const NodeId child = place[static_cast<size_t>(c)];
          t.children_order[static_cast<size_t>(w)].push_back(child);
          t.parent[static_cast<size_t>(child)] = w;
        }
      }
      f.trees.push_back(std::move(t));
    }
    return f;
  }

  const int U_;
  const int k_;
  const int P_;
  const IntertwineOptions opts_;
  const ScheduledTree shape_;
  int n_trees_ = 0;
  std::vector<NodeId> position_order_;
  std::vector<std::vector<int>> starts_;
  std::vector<std::vector<NodeId>> place_;
  std::vector<std::vector<char>> used_;
  std::vector<std::vector<char>> residue_used_;  // [node][residue]
  std::vector<std::map<NodeId, int>> child_multiplicity_;
  std::map<std::pair<int, NodeId>, NodeId> pinned_;
  std::vector<std::string> diagnostics_;
  long long expanded_ = 0;
  long long backtracks_ = 0;
  bool aborted_ = false;
};

}  // namespace

IntertwineAssignment solve_intertwining(int U, int k, int P,
                                        const IntertwineOptions& opts) {
  require_forest_params(U, k);
  require_positive_network(P);
  if (opts.expansion_cap < 1) {
    throw std::invalid_argument("expansion cap must be >= 1");
  }
  IntertwineSolver solver(U, k, P, opts);
  return solver.run();
}

Forest build_forest(int U, int k, int P, const IntertwineOptions& opts) {
  IntertwineAssignment a = solve_intertwining(U, k, P, opts);
  if (a.status != SolveStatus::solved) {
    std::string what = a.status == SolveStatus::aborted
                           ? "tree intertwining aborted at the expansion cap"
                           : "tree intertwining is infeasible at P = " +
                                 std::to_string(P);
    what += " (expanded " + std::to_string(a.expanded) + ", backtracked " +
            std::to_string(a.backtracks) + ")";
    throw IntertwineError(what, a.status, a.expanded, a.backtracks);
  }
  return *std::move(a.forest);
}

std::vector<int> reception_schedule(const ScheduledTree& t) { return t.offset; }

std::vector<long long> offset_histogram(const ScheduledTree& t) {
  int max_offset = 0;
  for (NodeId v = 1; v <= t.P; ++v) {
    max_offset = std::max(max_offset, t.offset[static_cast<size_t>(v)]);
  }
  std::vector<long long> hist(static_cast<size_t>(max_offset) + 1, 0);
  for (NodeId v = 1; v <= t.P; ++v) {
    hist[static_cast<size_t>(t.offset[static_cast<size_t>(v)])] += 1;
  }
  return hist;
}

nlohmann::ordered_json forest_to_json(const Forest& f) {
  nlohmann::ordered_json j;
  j["U"] = f.U;
  j["k"] = f.k;
  j["P"] = f.P;
  j["trees"] = nlohmann::ordered_json::array();
  for (const ScheduledTree& t : f.trees) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (NodeId child = 1; child <= t.P; ++child) {
      edges.push_back({t.parent[static_cast<size_t>(child)], child,
                       t.offset[static_cast<size_t>(child)]});
    }
    j["trees"].push_back({{"edges", std::move(edges)}});
  }
  return j;
}

nlohmann::ordered_json tree_to_json(const ScheduledTree& t) {
  return forest_to_json(Forest{t.U, t.k, t.P, {t}});
}

Forest forest_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("U") || !j.contains("k") ||
      !j.contains("P") || !j.contains("trees") || !j["trees"].is_array() ||
      j["trees"].empty()) {
    throw std::invalid_argument(
        "topology document must carry U, k, P and a non-empty trees array");
  }
  Forest f;
  f.U = j["U"].get<int>();
  f.k = j["k"].get<int>();
  f.P = j["P"].get<int>();
  if (f.P < 0) throw std::invalid_argument("P must be >= 0");
  for (const auto& jt : j["trees"]) {
    if (!jt.is_object() || !jt.contains("edges") || !jt["edges"].is_array()) {
      throw std::invalid_argument("each tree must carry an edges array");
    }
    ScheduledTree t;
    t.U = f.U;
    t.k = f.k;
    t.P = f.P;
    t.parent.assign(static_cast<size_t>(f.P) + 1, kNoParent);
    t.offset.assign(static_cast<size_t>(f.P) + 1, 0);
    t.children_order.assign(static_cast<size_t>(f.P) + 1, {});
    for (const auto& e : jt["edges"]) {
      if (!e.is_array() || e.size() != 3) {
        throw std::invalid_argument("edges must be [parent, child, offset]");
      }
      const NodeId parent = e[0].get<NodeId>();
      const NodeId child = e[1].get<NodeId>();
      const int offset = e[2].get<int>();
      if (child < 1 || child > f.P || parent < 0 || parent > f.P) {
        throw std::invalid_argument("edge names a node outside 0..P");
      }
      if (t.parent[static_cast<size_t>(child)] != kNoParent) {
        throw std::invalid_argument("node " + std::to_string(child) +
                                    " has two parents");
      }
      t.parent[static_cast<size_t>(child)] = parent;
      t.offset[static_cast<size_t>(child)] = offset;
    }
    // Serial order within a parent is the completion order.
    std::vector<NodeId> by_offset;
    for (NodeId v = 1; v <= f.P; ++v) by_offset.push_back(v);
    std::sort(by_offset.begin(), by_offset.end(), [&](NodeId a, NodeId b) {
      return std::pair(t.offset[static_cast<size_t>(a)], a) <
             std::pair(t.offset[static_cast<size_t>(b)], b);
    });
    for (NodeId v : by_offset) {
      const NodeId p = t.parent[static_cast<size_t>(v)];
      if (p != kNoParent) {
        t.children_order[static_cast<size_t>(p)].push_back(v);
      }
    }
    std::vector<std::string> violations;
    append_tree_violations(t, static_cast<int>(f.trees.size()), violations);
    if (!violations.empty()) {
      throw std::invalid_argument("malformed topology: " + violations.front());
    }
    f.trees.push_back(std::move(t));
  }
  return f;
}

}  // namespace streambound
