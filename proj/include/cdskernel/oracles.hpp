#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdskernel/graph.hpp"
#include "cdskernel/set_cover.hpp"
#include "cdskernel/vertex_set.hpp"

namespace cdskernel {

// Work caps for the exhaustive reference solvers. These are correctness
// anchors, not production paths; exceeding a cap raises ResourceError
// rather than ever returning a silently wrong answer.
struct OracleCaps {
  int max_subset_n = 30;       // subset enumeration (dominators, cores)
  int max_groups = 16;         // Steiner DP group count
  int max_steiner_n = 64;      // Steiner DP vertex count (bitmask bound)
  long long max_dp_states = 60'000'000;    // masks * vertices
  long long max_enumeration = 20'000'000;  // subset enumeration budget
};

inline constexpr int kInfSize = std::numeric_limits<int>::max() / 4;

struct SteinerQuery {
  Graph graph;
  std::vector<VertexSet> groups;  // pairwise disjoint, non-empty
  OracleCaps caps;
};

struct SteinerResult {
  int size = kInfSize;  // kInfSize when the groups cannot be joined
  VertexSet tree;
  bool feasible() const { return size < kInfSize; }
};

// Minimum-order Steiner tree for plain terminals (each its own group).
SteinerResult exact_steiner_tree(const Graph& g, const VertexSet& terminals,
                                 const OracleCaps& caps = {});

// Minimum-order group Steiner tree: at least one vertex per group.
SteinerResult exact_group_steiner_tree(const SteinerQuery& q);

// Terminal-subset dynamic program over (vertex, set-of-groups-hit) states,
// run for every group subset of size <= max_subset_size at once. The table
// is shared, so solving all subsets costs one DP instead of one per subset.
class GroupSteinerEngine {
public:
  GroupSteinerEngine(const Graph& g, std::vector<VertexSet> groups,
                     int max_subset_size, const OracleCaps& caps = {});

  int group_count() const { return static_cast<int>(groups_.size()); }
  const std::vector<VertexSet>& groups() const { return groups_; }

  // every mask with 1 <= popcount <= max_subset_size, ascending
  const std::vector<std::uint64_t>& masks() const { return masks_; }

  // Minimum order over trees hitting every group in `mask`; kInfSize if
  // infeasible. `mask` must have popcount <= max_subset_size.
  int tree_size(std::uint64_t mask) const;

  // Canonical optimal tree for `mask` (deterministic reconstruction).
  VertexSet tree(std::uint64_t mask) const;

private:
  int mask_index(std::uint64_t mask) const;
  void run_dp();

  const Graph& graph_;
  std::vector<VertexSet> groups_;
  int max_subset_;
  std::vector<int> group_of_;          // vertex -> group id or -1
  std::vector<std::uint64_t> masks_;   // restricted masks, ascending
  std::vector<std::vector<int>> dp_;   // dp_[mask index][vertex]
};

struct DominationQuery {
  Graph graph;
  VertexSet targets;  // Z
  int radius = 1;
  int budget = 0;  // k
  bool connected = false;
  OracleCaps caps;
};

struct DominatorResult {
  bool feasible = false;
  int size = 0;
  VertexSet dominator;  // lexicographically smallest among minimum solutions
};

// Smallest D, |D| <= budget, with every z in Z within distance `radius` of
// D (z in D counts), G[D] connected when requested. Exhaustive, lex-min.
DominatorResult exact_min_dominator(const DominationQuery& q);

// True iff every D with |D| <= k that r-dominates Z also r-dominates V(G).
bool is_domination_core(const Graph& g, const VertexSet& Z, int k, int r,
                        const OracleCaps& caps = {});

// True iff some subfamily of size <= k covers the whole universe.
bool exact_set_cover(const SetCoverInstance& sc, const OracleCaps& caps = {});

// Per-vertex bitmask of targets within distance `radius` (n <= 64).
std::vector<std::uint64_t> coverage_masks(const Graph& g,
                                          const VertexSet& targets,
                                          int radius);

}  // namespace cdskernel
