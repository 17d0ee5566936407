#pragma once

#include <string>
#include <vector>

#include "cdskernel/graph.hpp"
#include "cdskernel/oracles.hpp"
#include "cdskernel/vertex_set.hpp"

namespace cdskernel {

// r-projection M_r(u, X): vertices of X reachable from u along paths of
// length <= r whose internal vertices avoid X.
struct Projection {
  int u = -1;
  VertexSet X;
  VertexSet M;
  int r = 1;
};

// r-projection profile: X-avoiding distance to each vertex of A, in 1..r;
// unreachable-within-r entries are omitted (infinity).
struct ProjectionProfile {
  int u = -1;
  int r = 1;
  std::vector<std::pair<int, int>> rho;  // (vertex of A, distance), sorted
};

Projection projection(const Graph& g, int u, const VertexSet& X, int r);
ProjectionProfile profile(const Graph& g, int u, const VertexSet& A, int r);

// largest |M_r(u, X)| over u outside X; diagnostic
int max_projection_size(const Graph& g, const VertexSet& X, int r);

struct ClosureOptions {
  int target_projection_size = 4;
  int max_added = -1;  // default: no limit beyond V(G)
};

// Greedy stand-in for the r-closure: grows X until every outside vertex
// projects onto at most target_projection_size vertices, or the budget is
// spent. Only X <= result <= V(G) is promised; growth and the residual
// projection size are reported by the diagnostics, not guaranteed.
VertexSet closure(const Graph& g, const VertexSet& X, int r,
                  const ClosureOptions& opts = {});

// One improving (A, B) exchange applied repeatedly until fixpoint:
// |B| < |A| <= c, the result still dominates Z and has no more components.
VertexSet exchange_improve(const Graph& g, const VertexSet& Z,
                           const VertexSet& X, int c,
                           const OracleCaps& caps = {});

// Checks the c-exchange domination core property over every Z-dominator of
// size <= k_cap. Strictly desk scale.
bool is_exchange_core(const Graph& g, const VertexSet& Z, int c, int k_cap,
                      const OracleCaps& caps = {});

struct TreeClosureResult {
  VertexSet vertices;      // X'
  int repaired_subsets = 0;  // subsets patched by the exactness pass
};

// Superset X' of X preserving st_G(Y) inside G[X'] for every Y subset of X
// with |Y| <= q and st_G(Y) <= rq. Construction: closure at radius rq, all
// optimal Steiner trees avoiding G[X0]-edges of size <= rq for small
// subsets of X0, then a verification pass that patches any subset the
// construction missed (each patch adds one optimal tree of G).
TreeClosureResult tree_closure(const Graph& g, const VertexSet& X, int q,
                               int r, const OracleCaps& caps = {});

// Linear order on the vertices; order[i] is the i-th smallest vertex.
struct OrderedGraph {
  Graph graph;
  std::vector<int> order;
};

// Weakly s-reachable set of v: vertices u joined to v by a path of length
// <= s on which u is the minimum under the order.
VertexSet wreach(const OrderedGraph& og, int v, int s);

int max_wreach(const OrderedGraph& og, int s);

enum class WcolMode { exact, greedy };

struct WcolResult {
  int value = 0;
  std::vector<int> order;  // witness
};

struct WcolCaps {
  int max_exact_n = 9;
};

// Weak s-coloring number. Exact mode searches all orders (branch and bound
// over prefixes); greedy mode returns the value of a degeneracy-style
// order, an upper-bound witness.
WcolResult wcol(const Graph& g, int s, WcolMode mode,
                const WcolCaps& caps = {});

// Checks the separator property: every path of length <= r between X and y
// carries a vertex weakly r-reachable from both sides. Enumerates all
// simple paths; desk scale.
bool wcol_separator_check(const OrderedGraph& og, const VertexSet& X, int y,
                          int r);

int degeneracy(const Graph& g);

// Per-instance structural diagnostics (JSON).
std::string sparse_diagnostics(const Graph& g, const VertexSet& X, int r,
                               const ClosureOptions& opts = {});

}  // namespace cdskernel
