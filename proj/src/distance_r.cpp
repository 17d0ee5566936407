#include "cdskernel/distance_r.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cdskernel/errors.hpp"

namespace cdskernel {

ProfileClasses profile_classes(const Graph& g, const VertexSet& X, int r) {
  ProfileClasses out;
  out.X = X;
  out.r = r;
  std::map<std::vector<std::pair<int, int>>, VertexSet> classes;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (X.contains(u)) continue;
    classes[profile(g, u, X, r).rho].insert(u);
  }
  out.classes.assign(classes.begin(), classes.end());
  return out;
}

int r_kernel_t(int r, double alpha) {
  if (alpha <= 1.0) throw InputError("r_kernel_t: alpha must exceed 1");
  if (r < 1) throw InputError("r_kernel_t: radius must be >= 1");
  return static_cast<int>(std::ceil((4.0 * r + 2.0) / (alpha - 1.0)));
}

bool is_connected_r_dominator(const Graph& g, const VertexSet& Z,
                              const VertexSet& d, int r) {
  if (d.empty()) return g.vertex_count() == 0 && Z.empty();
  if (!is_connected(g, d)) return false;
  auto dist = bfs_distances(g, d, VertexSet{}, r);
  for (int z : Z)
    if (dist[z] == kUnreachable) return false;
  return true;
}

RCoreProvider exhaustive_r_core_provider(const OracleCaps& caps) {
  return [caps](const Graph& g, int k, int r) -> std::optional<VertexSet> {
    auto res = exact_min_dominator(
        {g, VertexSet::full(g.vertex_count()), r, k, false, caps});
    if (!res.feasible) return std::nullopt;
    VertexSet Z = VertexSet::full(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      VertexSet candidate = Z;
      candidate.erase(v);
      if (candidate.empty()) break;
      if (is_domination_core(g, candidate, k, r, caps)) Z = candidate;
    }
    return Z;
  };
}

std::optional<VertexSet> connected_core(const Graph& g, int k, int r,
                                        const RCoreProvider& provider) {
  auto base = provider(g, k, r);
  if (!base) return std::nullopt;
  VertexSet Y = *base;
  // a vertex farther than 2r from the core certifies infeasibility
  auto dist = bfs_distances(g, Y, VertexSet{}, 2 * r);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == kUnreachable) return std::nullopt;
  VertexSet Q = connect_dominator(g, VertexSet::full(g.vertex_count()), Y,
                                  2 * r);
  return Y.unions(Q);
}

// ---------------------------------------------------------------------------
// Reduced graph
// ---------------------------------------------------------------------------

namespace {

// shortest-path tree vertices from u to its whole projection, X-avoiding
VertexSet profile_tree_vertices(const Graph& g, int u, const VertexSet& X,
                                int r) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, kUnreachable), par(n, -1);
  dist[u] = 0;
  std::vector<char> in_x = X.marks(n);
  std::vector<int> queue{u};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    if (dist[x] >= r) continue;
    if (in_x[x] && x != u) continue;  // X vertices stay endpoints
    for (int w : g.neighbors(x))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[x] + 1;
        par[w] = x;
        queue.push_back(w);
      }
  }
  VertexSet kept{u};
  for (int x : X)
    if (dist[x] != kUnreachable && dist[x] <= r)
      for (int v = x; v != -1; v = par[v]) kept.insert(v);
  return kept;
}

}  // namespace

ReducedGraphResult build_reduced_graph(const Graph& g, const VertexSet& X,
                                       int t, int r, const OracleCaps& caps) {
  if (t < 1) throw InputError("build_reduced_graph: t must be >= 1");
  ProfileClasses classes = profile_classes(g, X, r);

  // groups: each core vertex alone, then one group per profile class
  std::vector<VertexSet> groups;
  for (int x : X) groups.push_back(VertexSet{x});
  for (const auto& [key, members] : classes.classes) groups.push_back(members);

  GroupSteinerEngine engine(g, groups, 2 * t, caps);
  VertexSet kept = X;
  VertexSet terminals;
  for (std::uint64_t mask : engine.masks()) {
    if (engine.tree_size(mask) > 2 * t) continue;
    VertexSet tree = engine.tree(mask);
    kept = kept.unions(tree);
    for (int v : tree)
      if (!X.contains(v)) terminals.insert(v);
  }
  // preserve every terminal's projection profile
  for (int u : terminals)
    kept = kept.unions(profile_tree_vertices(g, u, X, r));

  auto sub = induced_subgraph(g, kept);
  return {sub.graph, sub.to_original, terminals};
}

// ---------------------------------------------------------------------------
// Kernel driver and lifting
// ---------------------------------------------------------------------------

KernelOutput r_lossy_kernel(const Graph& g, int k, RKernelParams params,
                            const RCoreProvider& provider,
                            const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n < 1) throw InputError("r_lossy_kernel: empty graph");
  if (!is_connected(g, VertexSet::full(n)))
    throw InputError("r_lossy_kernel: graph must be connected");
  if (params.r < 1) throw InputError("r_lossy_kernel: radius must be >= 1");
  if (params.t <= 0) params.t = r_kernel_t(params.r, params.alpha);

  KernelParams kp;
  kp.t = params.t;
  kp.alpha = params.alpha;
  kp.r = params.r;

  auto core = connected_core(g, k, params.r, provider);
  if (!core) {
    KernelOutput out;
    out.reduced = AnnotatedInstance{Graph(1), VertexSet{}, 0, params.r};
    out.trivial_negative = true;
    out.kept = {-1};
    out.params = kp;
    return out;
  }

  // small-optimum regime: solve outright when a connected r-dominating set
  // of size < t exists
  if (params.t >= 2) {
    auto small = exact_min_dominator(
        {g, VertexSet::full(n), params.r, params.t - 1, true, caps});
    if (small.feasible) {
      auto sub = induced_subgraph(g, small.dominator);
      KernelOutput out;
      VertexSet all;
      for (int i = 0; i < sub.graph.vertex_count(); ++i) all.insert(i);
      out.reduced = AnnotatedInstance{sub.graph, all, k, params.r};
      out.exact_fallback = true;
      out.kept = sub.to_original;
      out.fallback_solution = small.dominator;
      out.params = kp;
      return out;
    }
  }

  auto rg = build_reduced_graph(g, *core, params.t, params.r, caps);
  std::vector<int> to_new(n, -1);
  for (int i = 0; i < rg.graph.vertex_count(); ++i) to_new[rg.kept[i]] = i;
  VertexSet reduced_core;
  for (int z : *core) {
    if (to_new[z] < 0)
      throw InputError("r_lossy_kernel: core vertex missing from kernel");
    reduced_core.insert(to_new[z]);
  }
  KernelOutput out;
  out.reduced = AnnotatedInstance{rg.graph, reduced_core, k, params.r};
  out.kept = rg.kept;
  out.params = kp;
  return out;
}

LiftReport r_lift(const AnnotatedInstance& original, const KernelOutput& output,
                  const VertexSet& reduced_solution) {
  LiftReport report;
  const int k = original.k;
  if (!is_connected_r_dominator(output.reduced.graph, output.reduced.Z,
                                reduced_solution, output.reduced.r))
    return report;

  if (output.trivial_negative || output.exact_fallback) {
    VertexSet lifted = output.trivial_negative
                           ? VertexSet::full(original.graph.vertex_count())
                           : output.fallback_solution;
    report.solution = lifted;
    report.value = std::min(lifted.size(), k + 1);
    report.valid = true;
    return report;
  }

  if (reduced_solution.size() <= k) {
    VertexSet lifted;
    for (int v : reduced_solution) lifted.insert(output.kept[v]);
    report.solution = lifted;
    report.value = lifted.size();
  } else {
    report.solution = VertexSet::full(original.graph.vertex_count());
    report.value = k + 1;
  }
  report.valid = true;
  return report;
}

KernelOutput one_approx_ds_bikernel(const Graph& g, int k, int r,
                                    const RCoreProvider& provider,
                                    const OracleCaps& caps) {
  (void)caps;
  auto core = provider(g, k, r);
  if (!core) {
    KernelOutput out;
    out.reduced = AnnotatedInstance{Graph(1), VertexSet{}, 0, r};
    out.trivial_negative = true;
    out.kept = {-1};
    out.params.r = r;
    return out;
  }
  ProfileClasses classes = profile_classes(g, *core, r);
  VertexSet kept = *core;
  for (const auto& [key, members] : classes.classes) {
    int rep = *members.begin();
    kept = kept.unions(profile_tree_vertices(g, rep, *core, r));
  }
  auto sub = induced_subgraph(g, kept);
  std::vector<int> to_new(g.vertex_count(), -1);
  for (int i = 0; i < sub.graph.vertex_count(); ++i)
    to_new[sub.to_original[i]] = i;
  VertexSet reduced_core;
  for (int z : *core) reduced_core.insert(to_new[z]);

  KernelOutput out;
  out.reduced = AnnotatedInstance{sub.graph, reduced_core, k, r};
  out.kept = sub.to_original;
  out.params.r = r;
  return out;
}

// ---------------------------------------------------------------------------
// Dot graph (diagnostic)
// ---------------------------------------------------------------------------

DotGraph build_dot_graph(const Graph& g, const ProfileClasses& classes,
                         int r) {
  const int n = g.vertex_count();
  auto edges = g.edges();
  int next_id = n;
  DotGraph out;

  for (const auto& [key, members] : classes.classes) {
    if (key.empty())
      throw InputError("build_dot_graph: class with empty projection");
    // x_kappa: minimum profile distance, ties to smallest id
    int x = -1, depth = -1;
    for (auto [vx, dist] : key)
      if (depth < 0 || dist < depth || (dist == depth && vx < x)) {
        x = vx;
        depth = dist;
      }
    // shortest-path tree from x avoiding the rest of X
    std::vector<int> dist(n, kUnreachable), par(n, -1);
    std::vector<char> in_x = classes.X.marks(n);
    dist[x] = 0;
    std::vector<int> queue{x};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int a = queue[qi];
      if (in_x[a] && a != x) continue;
      for (int w : g.neighbors(a))
        if (dist[w] == kUnreachable) {
          dist[w] = dist[a] + 1;
          par[w] = a;
          queue.push_back(w);
        }
    }
    // tree edges used by the members' paths
    std::vector<std::pair<int, int>> tree_edges;
    VertexSet tree_vertices;
    for (int u : members) {
      if (dist[u] != depth)
        throw InputError("build_dot_graph: members disagree on depth");
      for (int v = u; par[v] != -1; v = par[v])
        tree_edges.emplace_back(v, par[v]);
      tree_vertices.insert(u);
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    tree_edges.erase(std::unique(tree_edges.begin(), tree_edges.end()),
                     tree_edges.end());

    // copy the tree with every edge subdivided 2r times; leaves (class
    // members) keep their original ids
    std::map<int, int> copy_id;
    auto id_of = [&](int v) {
      if (members.contains(v)) return v;
      auto it = copy_id.find(v);
      if (it != copy_id.end()) return it->second;
      int fresh = next_id++;
      copy_id[v] = fresh;
      return fresh;
    };
    for (auto [a, b] : tree_edges) {
      // each tree edge becomes a path of length exactly 2r in the copy
      int ca = id_of(a), cb = id_of(b);
      int prev = ca;
      for (int i = 0; i < 2 * r - 1; ++i) {
        int fresh = next_id++;
        edges.emplace_back(prev, fresh);
        prev = fresh;
      }
      edges.emplace_back(prev, cb);
    }
    out.class_root.push_back(id_of(x));
    out.class_x.push_back(x);
    out.root_distance.push_back(2 * r * depth);
  }

  out.graph = Graph(next_id, edges);
  return out;
}

}  // namespace cdskernel
