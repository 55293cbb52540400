#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "streambound/fib.hpp"

namespace streambound {

using NodeId = int;
inline constexpr NodeId kSourceId = 0;
inline constexpr NodeId kNoParent = -1;

// A serialized distribution tree over nodes 0..P (0 = source).
//
// offset[v] is the number of time units after a chunk's generation at the
// source at which v completes its reception of that chunk. The m-th serial
// child of node v completes at offset[v] + m (offset[source] = 0), i.e. the
// transmission to it starts one slot earlier, at offset[v] + m - 1.
struct ScheduledTree {
  int U = 0;  // child budget of the source in this tree (per-period share)
  int k = 0;  // child budget of every other node
  int P = 0;
  std::vector<NodeId> parent;  // size P+1; parent[kSourceId] = kNoParent
  std::vector<int> offset;     // size P+1; offset[kSourceId] = 0
  std::vector<std::vector<NodeId>> children_order;  // serial order per node
};

// Bound-attaining single serialized tree for the k = U regime: a greedy
// breadth construction in which, each time unit, the eligible sender with the
// smallest next-free completion offset (ties: smallest node id) adopts the
// next node id as a serial child, every node stopping after U children.
// Throws std::invalid_argument for U < 2 or P < 1.
ScheduledTree build_single_tree(int U, int P);

// Shape of one tree of the k > U forest: identical greedy construction, but
// the source adopts at most U children (its k-slot period is split across the
// k/U trees) while every other node adopts up to k.
// Throws std::invalid_argument for U < 1, k < 2, k <= U, k % U != 0 or P < 1.
ScheduledTree build_tree_shape(int U, int k, int P);

// k/U serialized trees over the same node universe; chunk c travels down
// trees[(c-1) mod (k/U)] and the schedule repeats with period k.
struct Forest {
  int U = 0;
  int k = 0;
  int P = 0;
  std::vector<ScheduledTree> trees;

  int tree_count() const { return static_cast<int>(trees.size()); }
  int tree_of_chunk(long long chunk) const {
    return static_cast<int>((chunk - 1) % tree_count());
  }
  int period() const { return k; }
};

// A node transmitting in tree tau with per-chunk start offset o occupies the
// absolute slots (c-1)U + o for that tree's chunks c, all congruent to
// (tau*U + o) mod k. A forest is slot-conflict-free iff for every node these
// residues are pairwise distinct over all its transmissions in all trees.
struct SlotConflict {
  NodeId node;
  int residue;             // the clashing start residue mod k
  std::vector<int> trees;  // trees contributing a transmission at the residue
};

std::vector<SlotConflict> check_slot_conflicts(const Forest& f);

// Full structural audit: per-tree well-formedness (serial offsets, parent and
// children consistency, every node placed exactly once per tree), per-node
// children-union cardinality <= k, source budget <= U per tree, and residue
// distinctness. Returns human-readable violations; empty means valid.
std::vector<std::string> validate_forest(const Forest& f);

enum class SolveStatus { solved, infeasible, aborted };

// Pins `node` into the structural position `position` of tree `tree` before
// the search starts. Positions are named by the node id occupying the same
// slot in tree 0, whose placement is always the identity.
struct ForcedPlacement {
  int tree;
  NodeId position;
  NodeId node;
};

struct IntertwineOptions {
  long long expansion_cap = 10'000'000;
  std::vector<ForcedPlacement> forced;
};

// Result of the intertwining search over trees 1..k/U-1. `placements[i]` maps
// structural positions (indexed by node id, entry 0 unused) to the node
// occupying that position in tree i+1; present only when solved. Diagnostics
// explain rejected forced placements and the abort/infeasibility cause.
struct IntertwineAssignment {
  SolveStatus status = SolveStatus::infeasible;
  long long expanded = 0;
  long long backtracks = 0;
  std::vector<std::vector<NodeId>> placements;
  std::vector<std::string> diagnostics;
  std::optional<Forest> forest;
};

// Depth-first backtracking over node placements: trees in order, positions by
// (offset, structural id), candidates by ascending node id, pruning on
// residue clashes and children-union overflow. Deterministic; returns the
// lexicographically least solution under that ordering. Distinguishes proved
// infeasibility from hitting the expansion cap.
IntertwineAssignment solve_intertwining(int U, int k, int P,
                                        const IntertwineOptions& opts = {});

// Raised by build_forest when the intertwining search fails; carries the
// search outcome so callers can distinguish "proved infeasible" from "gave up
// at the expansion cap".
struct IntertwineError : std::runtime_error {
  IntertwineError(const std::string& what, SolveStatus status_,
                  long long expanded_, long long backtracks_)
      : std::runtime_error(what),
        status(status_),
        expanded(expanded_),
        backtracks(backtracks_) {}
  SolveStatus status;
  long long expanded;
  long long backtracks;
};

// Builds the first tree shape and solves the intertwining for the remaining
// k/U - 1 trees. The result passes validate_forest. Throws IntertwineError
// when the search exhausts or aborts.
Forest build_forest(int U, int k, int P, const IntertwineOptions& opts = {});

// Read-only projection of completion offsets, indexed by node id.
std::vector<int> reception_schedule(const ScheduledTree& t);

// Count of nodes per completion offset; entry [o] is the number of non-source
// nodes completing at offset o (entry 0 always 0).
std::vector<long long> offset_histogram(const ScheduledTree& t);

// JSON shape shared by trees and forests:
//   {"U": int, "k": int, "P": int,
//    "trees": [{"edges": [[parent, child, offset], ...]}, ...]}
// Edges are listed by ascending child id. A single tree serializes as a
// one-tree forest. Parsing rejects structurally invalid documents.
nlohmann::ordered_json forest_to_json(const Forest& f);
nlohmann::ordered_json tree_to_json(const ScheduledTree& t);
Forest forest_from_json(const nlohmann::ordered_json& j);

}  // namespace streambound
