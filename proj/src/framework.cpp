#include "cdskernel/framework.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include <json.hpp>

#include "cdskernel/errors.hpp"

namespace cdskernel {

bool is_connected_dominating_set(const Graph& g, const VertexSet& d) {
  if (d.empty()) return g.vertex_count() == 0;
  if (!is_connected(g, d)) return false;
  auto dist = bfs_distances(g, d, VertexSet{}, 1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == kUnreachable) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Covering family
// ---------------------------------------------------------------------------

CoveringFamily covering_family(const Graph& g, const VertexSet& D, int t) {
  if (t < 1) throw InputError("covering_family: t must be >= 1");
  if (!is_connected(g, D))
    throw InputError("covering_family: G[D] must be connected");
  CoveringFamily family;
  family.t = t;
  if (D.empty()) return family;

  const int n = g.vertex_count();
  // spanning tree of G[D], BFS from the smallest vertex
  std::vector<int> parent(n, -1);
  std::vector<std::vector<int>> children(n);
  std::vector<char> in_d = D.marks(n);
  const int root = *D.begin();
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (in_d[w] && !seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        children[u].push_back(w);
        queue.push_back(w);
      }
  }

  std::vector<char> alive = D.marks(n);
  auto subtree_weights = [&](std::vector<int>& weight) {
    // iterative post-order over alive vertices
    weight.assign(n, 0);
    std::vector<std::pair<int, int>> stack{{root, 0}};
    std::vector<int> order;
    while (!stack.empty()) {
      auto [v, stage] = stack.back();
      stack.pop_back();
      if (!alive[v]) continue;
      order.push_back(v);
      for (int c : children[v]) stack.push_back({c, 0});
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      weight[v] = 1;
      for (int c : children[v])
        if (alive[c]) weight[v] += weight[c];
    }
  };

  auto collect_subtree = [&](int v) {
    VertexSet part;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (!alive[u]) continue;
      part.insert(u);
      for (int c : children[u]) stack.push_back(c);
    }
    return part;
  };

  int alive_count = D.size();
  std::vector<int> weight;
  while (alive_count > 0) {
    subtree_weights(weight);
    // step (2): a vertex of weight in [t, 2t], smallest weight then id
    int pick = -1;
    for (int v : D)
      if (alive[v] && weight[v] >= t && weight[v] <= 2 * t)
        if (pick < 0 || weight[v] < weight[pick]) pick = v;
    if (pick >= 0) {
      VertexSet part = collect_subtree(pick);
      family.parts.push_back(part);
      for (int u : part) alive[u] = 0;
      alive_count -= part.size();
      continue;
    }
    // step (3): a vertex of weight > 2t, smallest weight then id; all of
    // its children have weight <= t-1, greedily take children until > t
    for (int v : D)
      if (alive[v] && weight[v] > 2 * t)
        if (pick < 0 || weight[v] < weight[pick]) pick = v;
    if (pick >= 0) {
      VertexSet part{pick};
      int sum = 0;
      for (int c : children[pick]) {
        if (!alive[c]) continue;
        if (sum > t) break;
        VertexSet sub = collect_subtree(c);
        part = part.unions(sub);
        sum += weight[c];
        for (int u : sub) alive[u] = 0;
        alive_count -= sub.size();
      }
      family.parts.push_back(part);
      continue;
    }
    // step (4): everything weighs < t; the remaining tree is one part
    family.parts.push_back(collect_subtree(root));
    break;
  }
  return family;
}

// ---------------------------------------------------------------------------
// Connector repair
// ---------------------------------------------------------------------------

namespace {

struct Components {
  int count = 0;
  std::vector<int> label;  // -1 outside D u Q
};

Components components_of(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  Components c;
  c.label.assign(n, -1);
  std::vector<char> in = s.marks(n);
  for (int start : s) {
    if (c.label[start] >= 0) continue;
    int id = c.count++;
    std::deque<int> queue{start};
    c.label[start] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u))
        if (in[w] && c.label[w] < 0) {
          c.label[w] = id;
          queue.push_back(w);
        }
    }
  }
  return c;
}

// BFS distances and parents from one component (multi-source).
void component_bfs(const Graph& g, const Components& comps, int id,
                   std::vector<int>& dist, std::vector<int>& par) {
  const int n = g.vertex_count();
  dist.assign(n, kUnreachable);
  par.assign(n, -1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v)
    if (comps.label[v] == id) {
      dist[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        par[w] = u;
        queue.push_back(w);
      }
  }
}

}  // namespace

VertexSet connect_dominator(const Graph& g, const VertexSet& X,
                            const VertexSet& D, int radius) {
  if (radius < 1) throw InputError("connect_dominator: radius must be >= 1");
  if (!is_connected(g, X))
    throw InputError("connect_dominator: G[X] must be connected");
  {
    auto dist = bfs_distances(g, D, VertexSet{}, radius);
    for (int x : X)
      if (dist[x] == kUnreachable)
        throw InputError("connect_dominator: D does not dominate X");
  }

  VertexSet Q;
  int previous_count = -1;
  while (true) {
    VertexSet du = D.unions(Q);
    Components comps = components_of(g, du);
    if (comps.count <= 1) break;
    if (previous_count >= 0 && comps.count >= previous_count)
      throw std::logic_error("connect_dominator: no progress");
    previous_count = comps.count;

    if (radius == 1) {
      // distances from every component
      std::vector<std::vector<int>> dist(comps.count), par(comps.count);
      for (int c = 0; c < comps.count; ++c)
        component_bfs(g, comps, c, dist[c], par[c]);

      // step (3): a vertex of X outside D u Q adjacent to >= 2 components
      bool applied = false;
      for (int z : X) {
        if (du.contains(z)) continue;
        int seen = 0;
        for (int c = 0; c < comps.count && seen < 2; ++c)
          if (dist[c][z] != kUnreachable && dist[c][z] <= 1) ++seen;
        if (seen >= 2) {
          Q.insert(z);
          applied = true;
          break;
        }
      }
      if (applied) continue;

      // step (4): an edge of G[X] whose endpoints are dominated by two
      // different components
      for (auto [u, v] : g.edges()) {
        if (applied) break;
        if (!X.contains(u) || !X.contains(v)) continue;
        for (int a = 0; a < comps.count && !applied; ++a) {
          if (dist[a][u] == kUnreachable || dist[a][u] > 1) continue;
          for (int b = 0; b < comps.count; ++b) {
            if (b == a) continue;
            if (dist[b][v] != kUnreachable && dist[b][v] <= 1) {
              Q.insert(u);
              Q.insert(v);
              applied = true;
              break;
            }
          }
        }
      }
      if (!applied)
        throw InputError(
            "connect_dominator: stuck; some component sees no vertex of X");
      continue;
    }

    // radius >= 2: join the two components with the shortest connecting
    // path whose interior stays outside D u Q; all interior vertices
    // enter Q. Such a path of length <= 2 * radius exists whenever D
    // radius-dominates the connected set X.
    int best_len = kNoCap, best_from = -1, best_tail = -1;
    std::vector<int> best_par;
    for (int c = 0; c < comps.count; ++c) {
      const int n = g.vertex_count();
      std::vector<int> dist(n, kUnreachable), par(n, -1);
      std::deque<int> queue;
      for (int v = 0; v < n; ++v)
        if (comps.label[v] == c) {
          dist[v] = 0;
          queue.push_back(v);
        }
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        // vertices of other components end the search; do not pass through
        if (comps.label[u] >= 0 && comps.label[u] != c) continue;
        for (int w : g.neighbors(u))
          if (dist[w] == kUnreachable) {
            dist[w] = dist[u] + 1;
            par[w] = u;
            queue.push_back(w);
          }
      }
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (comps.label[v] < 0 || comps.label[v] == c) continue;
        if (dist[v] != kUnreachable && dist[v] < best_len) {
          best_len = dist[v];
          best_from = c;
          best_tail = v;
          best_par = par;
        }
      }
    }
    if (best_from < 0 || best_len > 2 * radius)
      throw InputError(
          "connect_dominator: components out of connector range");
    for (int v = best_par[best_tail]; v != -1 && comps.label[v] < 0;
         v = best_par[v])
      Q.insert(v);
  }
  return Q;
}

// ---------------------------------------------------------------------------
// Core partition
// ---------------------------------------------------------------------------

CorePartition core_partition(const Graph& g, const VertexSet& Z) {
  CorePartition part;
  part.core = Z;
  std::map<VertexSet, VertexSet> classes;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (Z.contains(u)) continue;
    VertexSet sig;
    for (int w : g.neighbors(u))
      if (Z.contains(w)) sig.insert(w);
    classes[sig].insert(u);
  }
  part.classes.assign(classes.begin(), classes.end());
  return part;
}

std::vector<VertexSet> CorePartition::groups() const {
  std::vector<VertexSet> out;
  for (int z : core) out.push_back(VertexSet{z});
  for (const auto& [sig, members] : classes) out.push_back(members);
  return out;
}

// ---------------------------------------------------------------------------
// Kernel driver
// ---------------------------------------------------------------------------

CoreProvider exhaustive_core_provider(const OracleCaps& caps) {
  return [caps](const Graph& g, int k) -> std::optional<VertexSet> {
    auto res = exact_min_dominator(
        {g, VertexSet::full(g.vertex_count()), 1, k, true, caps});
    if (!res.feasible) return std::nullopt;
    VertexSet Z = VertexSet::full(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      VertexSet candidate = Z;
      candidate.erase(v);
      if (candidate.empty()) break;
      if (is_domination_core(g, candidate, k, 1, caps)) Z = candidate;
    }
    return Z;
  };
}

namespace {

KernelOutput trivial_negative_output(KernelParams params) {
  KernelOutput out;
  out.reduced = AnnotatedInstance{Graph(1), VertexSet{}, 0, params.r};
  out.trivial_negative = true;
  out.kept = {-1};
  out.params = params;
  return out;
}

}  // namespace

KernelOutput lossy_cds_kernel(const Graph& g, int k, double eps,
                              const CoreProvider& provider,
                              const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n < 1) throw InputError("lossy_cds_kernel: empty graph");
  if (!is_connected(g, VertexSet::full(n)))
    throw InputError("lossy_cds_kernel: graph must be connected");
  if (eps <= 0) throw InputError("lossy_cds_kernel: eps must be positive");
  if (k < 0) throw InputError("lossy_cds_kernel: negative budget");

  const int t = static_cast<int>(std::ceil(3.0 / eps));
  KernelParams params;
  params.t = t;
  params.epsilon = eps;
  params.r = 1;

  auto core = provider(g, k);
  if (!core) return trivial_negative_output(params);

  // small-optimum regime: if cds(G) < 3/eps, solve outright and emit the
  // answer as a stand-in instance
  if (t >= 2) {
    auto small = exact_min_dominator(
        {g, VertexSet::full(n), 1, t - 1, true, caps});
    if (small.feasible) {
      KernelOutput out;
      auto sub = induced_subgraph(g, small.dominator);
      VertexSet reduced_core;
      for (int i = 0; i < sub.graph.vertex_count(); ++i) reduced_core.insert(i);
      out.reduced = AnnotatedInstance{sub.graph, reduced_core, k, 1};
      out.exact_fallback = true;
      out.kept = sub.to_original;
      out.fallback_solution = small.dominator;
      out.params = params;
      return out;
    }
  }

  CorePartition partition = core_partition(g, *core);
  std::vector<VertexSet> groups = partition.groups();
  GroupSteinerEngine engine(g, groups, 2 * t, caps);

  VertexSet marked;
  for (std::uint64_t mask : engine.masks()) {
    int size = engine.tree_size(mask);
    if (size <= 2 * t) marked = marked.unions(engine.tree(mask));
  }

  {
    auto dist = bfs_distances(g, marked, VertexSet{}, 1);
    for (int v = 0; v < n; ++v)
      if (dist[v] == kUnreachable) return trivial_negative_output(params);
  }

  VertexSet W = connect_dominator(g, VertexSet::full(n), marked, 1);
  VertexSet Y = marked.unions(W);

  auto sub = induced_subgraph(g, Y);
  std::vector<int> to_new(n, -1);
  for (int i = 0; i < sub.graph.vertex_count(); ++i)
    to_new[sub.to_original[i]] = i;
  VertexSet reduced_core;
  for (int z : *core) {
    if (to_new[z] < 0)
      throw InputError("lossy_cds_kernel: core vertex missing from kernel");
    reduced_core.insert(to_new[z]);
  }

  KernelOutput out;
  out.reduced = AnnotatedInstance{sub.graph, reduced_core, k, 1};
  out.kept = sub.to_original;
  out.params = params;
  return out;
}

LiftReport lift_solution(const AnnotatedInstance& original,
                         const KernelOutput& output,
                         const VertexSet& reduced_solution) {
  LiftReport report;
  const int k = original.k;
  if (!is_connected_dominating_set(output.reduced.graph, reduced_solution))
    return report;  // invalid: empty solution, infinite value

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

KernelOutput ds_bikernel(const Graph& g, const VertexSet& Z, int k) {
  CorePartition partition = core_partition(g, Z);
  VertexSet keep = Z;
  for (const auto& [sig, members] : partition.classes)
    keep.insert(*members.begin());

  auto sub = induced_subgraph(g, keep);
  std::vector<int> to_new(g.vertex_count(), -1);
  for (int i = 0; i < sub.graph.vertex_count(); ++i)
    to_new[sub.to_original[i]] = i;
  VertexSet reduced_core;
  for (int z : Z) reduced_core.insert(to_new[z]);

  KernelOutput out;
  out.reduced = AnnotatedInstance{sub.graph, reduced_core, k, 1};
  out.kept = sub.to_original;
  return out;
}

std::string kernel_output_to_json(const KernelOutput& out) {
  nlohmann::json j;
  j["schema"] = 1;
  j["reduced_graph"]["n"] = out.reduced.graph.vertex_count();
  auto& edges = j["reduced_graph"]["edges"] = nlohmann::json::array();
  for (auto [u, v] : out.reduced.graph.edges())
    edges.push_back(nlohmann::json::array({u, v}));
  j["Z"] = out.reduced.Z.ids();
  j["k"] = out.reduced.k;
  j["r"] = out.reduced.r;
  j["kept_map"] = out.kept;
  j["params"]["t"] = out.params.t;
  j["params"]["epsilon"] = out.params.epsilon;
  j["params"]["alpha"] = out.params.alpha;
  j["trivial_negative"] = out.trivial_negative;
  j["exact_fallback"] = out.exact_fallback;
  j["fallback_solution"] = out.fallback_solution.ids();
  return j.dump(2);
}

}  // namespace cdskernel
