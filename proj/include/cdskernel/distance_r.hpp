#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cdskernel/framework.hpp"
#include "cdskernel/graph.hpp"
#include "cdskernel/oracles.hpp"
#include "cdskernel/sparse_structure.hpp"

namespace cdskernel {

// Classes of u ~_{X,r} v <=> identical r-projection profiles on X, over the
// vertices outside X.
struct ProfileClasses {
  VertexSet X;
  int r = 1;
  // canonical profile (sorted (vertex, distance) pairs) -> members
  std::vector<std::pair<std::vector<std::pair<int, int>>, VertexSet>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
};

ProfileClasses profile_classes(const Graph& g, const VertexSet& X, int r);

struct RKernelParams {
  int r = 1;
  double alpha = 2.0;
  int t = 0;  // derived from alpha and r when 0
};

// covering parameter: smallest integer t with (1 + (4r+2)/t) <= alpha
int r_kernel_t(int r, double alpha);

// Either certifies that no r-dominating set of size <= k exists (nullopt)
// or returns a (k, r)-domination core.
using RCoreProvider =
    std::function<std::optional<VertexSet>(const Graph&, int k, int r)>;

RCoreProvider exhaustive_r_core_provider(const OracleCaps& caps = {});

// Connected (k, r)-domination core: base core, the 2r-distance rejection
// rule, and connector repair at radius 2r.
std::optional<VertexSet> connected_core(const Graph& g, int k, int r,
                                        const RCoreProvider& provider);

struct ReducedGraphResult {
  Graph graph;             // induced subgraph of g on the kept vertices
  std::vector<int> kept;   // new id -> original id
  VertexSet terminals;     // original ids of marked-tree terminals
};

// The projection-preserving subgraph: X, one fixed minimum group Steiner
// tree per small class subset, and a profile-preserving shortest-path tree
// for every terminal.
ReducedGraphResult build_reduced_graph(const Graph& g, const VertexSet& X,
                                       int t, int r,
                                       const OracleCaps& caps = {});

// The alpha-approximate pre-kernel for connected distance-r domination.
KernelOutput r_lossy_kernel(const Graph& g, int k, RKernelParams params,
                            const RCoreProvider& provider,
                            const OracleCaps& caps = {});

LiftReport r_lift(const AnnotatedInstance& original, const KernelOutput& output,
                  const VertexSet& reduced_solution);

// Exact (1-approximate) annotated kernel: Z plus one representative per
// profile class with its profile-preserving tree.
KernelOutput one_approx_ds_bikernel(const Graph& g, int k, int r,
                                    const RCoreProvider& provider,
                                    const OracleCaps& caps = {});

// D is a connected distance-r dominator of Z inside g.
bool is_connected_r_dominator(const Graph& g, const VertexSet& Z,
                              const VertexSet& d, int r);

struct DotGraph {
  Graph graph;                  // host graph plus subdivided class trees
  std::vector<int> class_root;  // per input class: root copy v_kappa
  std::vector<int> class_x;     // per input class: chosen x_kappa
  std::vector<int> root_distance;  // per class: distance root -> leaves
};

// Diagnostic construction translating group Steiner problems on profile
// classes into plain Steiner problems: per class, a (2r)-subdivided copy of
// the shortest-path tree from x_kappa, leaves identified with the members.
DotGraph build_dot_graph(const Graph& g, const ProfileClasses& classes,
                         int r);

}  // namespace cdskernel
