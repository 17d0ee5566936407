#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cdskernel/graph.hpp"
#include "cdskernel/oracles.hpp"
#include "cdskernel/vertex_set.hpp"

namespace cdskernel {

inline constexpr int kInfValue = std::numeric_limits<int>::max();

// (graph, annotated targets Z, budget k, radius r). Plain CDS instances use
// Z = V(G) and r = 1.
struct AnnotatedInstance {
  Graph graph;
  VertexSet Z;
  int k = 0;
  int r = 1;
};

// Connected pieces of at most 2t vertices covering a connected dominator.
struct CoveringFamily {
  std::vector<VertexSet> parts;
  int t = 1;
};

// Spanning-tree weight procedure: pieces of size <= 2t, each connected in
// G[D], union = D, at most |D|/t + 1 pieces, total size <= (1+1/t)|D| + 1.
CoveringFamily covering_family(const Graph& g, const VertexSet& D, int t);

// Connector repair: given connected G[X] and D that `radius`-dominates X,
// returns Q with G[D u Q] connected and |Q| <= 2 * radius * p where p is
// the number of components of G[D].
VertexSet connect_dominator(const Graph& g, const VertexSet& X,
                            const VertexSet& D, int radius = 1);

// Classes of the relation u ~_Z v <=> N(u) n Z = N(v) n Z over V \ Z.
struct CorePartition {
  VertexSet core;
  // sorted by signature; members sorted
  std::vector<std::pair<VertexSet, VertexSet>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  // group family: one singleton {z} per core vertex, then one group per class
  std::vector<VertexSet> groups() const;
};

CorePartition core_partition(const Graph& g, const VertexSet& Z);

struct KernelParams {
  int t = 0;
  double epsilon = 0.0;
  double alpha = 0.0;
  int r = 1;
};

struct KernelOutput {
  AnnotatedInstance reduced;
  bool trivial_negative = false;
  // small-optimum regime: the instance was solved outright and the reduced
  // instance is a stand-in; the solution lifting returns fallback_solution
  bool exact_fallback = false;
  std::vector<int> kept;  // reduced id -> original id (-1 when synthetic)
  VertexSet fallback_solution;  // original ids
  KernelParams params;
};

struct LiftReport {
  VertexSet solution;  // original ids
  int value = kInfValue;
  bool valid = false;
};

// Either certifies cds(G) > k (nullopt) or yields a k-domination core.
using CoreProvider =
    std::function<std::optional<VertexSet>(const Graph&, int k)>;

// Oracle-backed provider: rejects iff no connected dominating set of size
// <= k exists, otherwise shrinks V(G) greedily while the oracle confirms
// the k-domination-core property.
CoreProvider exhaustive_core_provider(const OracleCaps& caps = {});

// The (1+eps)-approximate kernel driver: domination core -> neighborhood
// classes -> marked group Steiner trees over all group subsets of size
// <= 2t -> connectivity repair -> induced instance.
KernelOutput lossy_cds_kernel(const Graph& g, int k, double eps,
                              const CoreProvider& provider,
                              const OracleCaps& caps = {});

LiftReport lift_solution(const AnnotatedInstance& original,
                         const KernelOutput& output, const VertexSet& reduced_solution);

// Keep Z plus one representative per ~_Z class; exact for Z-domination.
KernelOutput ds_bikernel(const Graph& g, const VertexSet& Z, int k);

// JSON serialization of a kernel output (schema-versioned).
std::string kernel_output_to_json(const KernelOutput& out);

bool is_connected_dominating_set(const Graph& g, const VertexSet& d);

}  // namespace cdskernel
