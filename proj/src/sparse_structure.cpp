#include "cdskernel/sparse_structure.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "cdskernel/errors.hpp"

namespace cdskernel {

Projection projection(const Graph& g, int u, const VertexSet& X, int r) {
  if (X.contains(u)) throw InputError("projection: u must lie outside X");
  if (r < 1) throw InputError("projection: radius must be >= 1");
  auto dist = bfs_distances(g, VertexSet{u}, X, r);
  Projection proj{u, X, {}, r};
  for (int x : X)
    if (dist[x] != kUnreachable) proj.M.insert(x);
  return proj;
}

ProjectionProfile profile(const Graph& g, int u, const VertexSet& A, int r) {
  if (A.contains(u)) throw InputError("profile: u must lie outside A");
  if (r < 1) throw InputError("profile: radius must be >= 1");
  auto dist = bfs_distances(g, VertexSet{u}, A, r);
  ProjectionProfile p{u, r, {}};
  for (int a : A)
    if (dist[a] != kUnreachable) p.rho.emplace_back(a, dist[a]);
  return p;
}

int max_projection_size(const Graph& g, const VertexSet& X, int r) {
  int worst = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (!X.contains(u))
      worst = std::max(worst, projection(g, u, X, r).M.size());
  return worst;
}

VertexSet closure(const Graph& g, const VertexSet& X, int r,
                  const ClosureOptions& opts) {
  const int n = g.vertex_count();
  VertexSet closed = X;
  int budget = opts.max_added < 0 ? n : opts.max_added;
  while (budget > 0 && closed.size() < n) {
    // score candidates by how many oversized projections they would touch
    std::vector<int> score(n, 0);
    bool oversized_any = false;
    for (int u = 0; u < n; ++u) {
      if (closed.contains(u)) continue;
      auto dist = bfs_distances(g, VertexSet{u}, closed, r);
      int msize = 0;
      for (int x : closed)
        if (dist[x] != kUnreachable) ++msize;
      if (msize <= opts.target_projection_size) continue;
      oversized_any = true;
      ++score[u];  // swallowing u removes its projection outright
      for (int v = 0; v < n; ++v)
        if (v != u && !closed.contains(v) && dist[v] != kUnreachable &&
            dist[v] < r)
          ++score[v];  // inner vertex of some short X-avoiding path
    }
    if (!oversized_any) break;
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (score[v] > 0 && (pick < 0 || score[v] > score[pick])) pick = v;
    if (pick < 0) break;
    closed.insert(pick);
    --budget;
  }
  return closed;
}

// ---------------------------------------------------------------------------
// Exchange domination cores
// ---------------------------------------------------------------------------

namespace {

bool dominates_set(const Graph& g, const VertexSet& d,
                   const VertexSet& targets) {
  if (d.empty()) return targets.empty();
  auto dist = bfs_distances(g, d, VertexSet{}, 1);
  for (int z : targets)
    if (dist[z] == kUnreachable) return false;
  return true;
}

// first improving exchange under (|A| asc, A lex, |B| asc, B lex)
bool find_exchange(const Graph& g, const VertexSet& Z, const VertexSet& X,
                   int c, VertexSet* improved) {
  const int n = g.vertex_count();
  const int base_comps = component_count(g, X);
  std::vector<int> xs(X.begin(), X.end());
  for (int a = 1; a <= std::min(c, static_cast<int>(xs.size())); ++a) {
    std::vector<int> apick;
    auto rec_a = [&](auto&& self, int next) -> bool {
      if (static_cast<int>(apick.size()) == a) {
        VertexSet A;
        for (int i : apick) A.insert(xs[i]);
        VertexSet stripped = X.minus(A);
        for (int b = 0; b < a; ++b) {
          std::vector<int> bpick;
          auto rec_b = [&](auto&& selfb, int nextb) -> bool {
            if (static_cast<int>(bpick.size()) == b) {
              VertexSet candidate = stripped;
              for (int v : bpick) candidate.insert(v);
              if (!dominates_set(g, candidate, Z)) return false;
              if (component_count(g, candidate) > base_comps) return false;
              *improved = candidate;
              return true;
            }
            for (int v = nextb; v < n; ++v) {
              bpick.push_back(v);
              if (selfb(selfb, v + 1)) return true;
              bpick.pop_back();
            }
            return false;
          };
          if (rec_b(rec_b, 0)) return true;
        }
        return false;
      }
      for (int i = next; i < static_cast<int>(xs.size()); ++i) {
        apick.push_back(i);
        if (self(self, i + 1)) return true;
        apick.pop_back();
      }
      return false;
    };
    if (rec_a(rec_a, 0)) return true;
  }
  return false;
}

}  // namespace

VertexSet exchange_improve(const Graph& g, const VertexSet& Z,
                           const VertexSet& X, int c,
                           const OracleCaps& caps) {
  if (c < 1) throw InputError("exchange_improve: c must be >= 1");
  if (!dominates_set(g, X, Z))
    throw InputError("exchange_improve: X must dominate Z");
  long long work = 1;
  for (int i = 0; i < c; ++i) work *= std::max(1, g.vertex_count());
  for (int i = 0; i + 1 < c; ++i) work *= std::max(1, g.vertex_count());
  if (work > caps.max_enumeration)
    throw ResourceError("exchange_improve: enumeration budget exceeded");

  VertexSet current = X;
  VertexSet improved;
  while (find_exchange(g, Z, current, c, &improved)) current = improved;
  return current;
}

bool is_exchange_core(const Graph& g, const VertexSet& Z, int c, int k_cap,
                      const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n > 64) throw ResourceError("is_exchange_core: graph larger than 64");
  auto cover_z = coverage_masks(g, Z, 1);
  auto cover_all = coverage_masks(g, VertexSet::full(n), 1);
  const std::uint64_t full_z =
      Z.size() >= 64 ? ~std::uint64_t{0}
                     : (std::uint64_t{1} << Z.size()) - 1;
  const std::uint64_t full_v =
      n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  long long budget = caps.max_enumeration;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next, int remaining, std::uint64_t accz,
                 std::uint64_t accv) -> bool {
    if (--budget < 0)
      throw ResourceError("is_exchange_core: enumeration budget exceeded");
    if (accz == full_z && accv != full_v) {
      // X dominates Z but not G: it must admit a valid exchange
      VertexSet X(pick);
      VertexSet improved;
      if (!find_exchange(g, Z, X, c, &improved)) return true;  // violated
    }
    if (remaining == 0 || next == n) return false;
    for (int v = next; v < n; ++v) {
      pick.push_back(v);
      if (self(self, v + 1, remaining - 1, accz | cover_z[v],
               accv | cover_all[v]))
        return true;
      pick.pop_back();
    }
    return false;
  };
  return !rec(rec, 0, k_cap, 0, 0);
}

// ---------------------------------------------------------------------------
// Tree closure
// ---------------------------------------------------------------------------

namespace {

Graph drop_internal_edges(const Graph& g, const VertexSet& X0) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (!(X0.contains(u) && X0.contains(v))) edges.emplace_back(u, v);
  return Graph(g.vertex_count(), edges);
}

template <typename Visit>
void for_each_small_subset(const std::vector<int>& pool, int max_size,
                           Visit&& visit) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (!pick.empty()) visit(pick);
    if (static_cast<int>(pick.size()) == max_size) return;
    for (std::size_t i = next; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

TreeClosureResult tree_closure(const Graph& g, const VertexSet& X, int q,
                               int r, const OracleCaps& caps) {
  if (q < 1 || r < 1) throw InputError("tree_closure: q, r must be >= 1");
  const int rq = r * q;
  VertexSet X0 = closure(g, X, rq, {});
  VertexSet closed = X0;

  // optimal Steiner trees that avoid edges inside X0, kept when small
  Graph outside = drop_internal_edges(g, X0);
  std::vector<int> pool(X0.begin(), X0.end());
  for_each_small_subset(pool, q, [&](const std::vector<int>& pick) {
    auto res = exact_steiner_tree(outside, VertexSet(pick), caps);
    if (res.feasible() && res.size <= rq) closed = closed.unions(res.tree);
  });

  // exactness pass: any small subset of X whose optimum is not realized
  // inside G[X'] yet gets its optimal tree added outright
  TreeClosureResult result;
  std::vector<int> xpool(X.begin(), X.end());
  for_each_small_subset(xpool, q, [&](const std::vector<int>& pick) {
    auto in_g = exact_steiner_tree(g, VertexSet(pick), caps);
    if (!in_g.feasible() || in_g.size > rq) return;
    auto sub = induced_subgraph(g, closed);
    std::vector<int> to_new(g.vertex_count(), -1);
    for (int i = 0; i < sub.graph.vertex_count(); ++i)
      to_new[sub.to_original[i]] = i;
    VertexSet mapped;
    for (int v : pick) mapped.insert(to_new[v]);
    auto inside = exact_steiner_tree(sub.graph, mapped, caps);
    if (!inside.feasible() || inside.size > in_g.size) {
      closed = closed.unions(in_g.tree);
      ++result.repaired_subsets;
    }
  });

  result.vertices = closed;
  return result;
}

// ---------------------------------------------------------------------------
// Weak coloring numbers
// ---------------------------------------------------------------------------

namespace {

std::vector<int> positions_of(const OrderedGraph& og) {
  const int n = og.graph.vertex_count();
  if (static_cast<int>(og.order.size()) != n)
    throw InputError("ordered graph: order size mismatch");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = og.order[i];
    if (v < 0 || v >= n || pos[v] != -1)
      throw InputError("ordered graph: order is not a permutation");
    pos[v] = i;
  }
  return pos;
}

}  // namespace

VertexSet wreach(const OrderedGraph& og, int v, int s) {
  const Graph& g = og.graph;
  const int n = g.vertex_count();
  auto pos = positions_of(og);
  if (v < 0 || v >= n) throw InputError("wreach: vertex out of range");
  VertexSet out;
  for (int u = 0; u < n; ++u) {
    if (pos[u] > pos[v]) continue;
    // BFS from u through vertices strictly larger than u
    std::vector<int> dist(n, kUnreachable);
    dist[u] = 0;
    std::vector<int> queue{u};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      if (dist[x] == s) continue;
      for (int w : g.neighbors(x))
        if (dist[w] == kUnreachable && pos[w] > pos[u]) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
    }
    if (dist[v] != kUnreachable && dist[v] <= s) out.insert(u);
  }
  return out;
}

int max_wreach(const OrderedGraph& og, int s) {
  int worst = 0;
  for (int v = 0; v < og.graph.vertex_count(); ++v)
    worst = std::max(worst, wreach(og, v, s).size());
  return worst;
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int degen = 0;
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
    degen = std::max(degen, deg[best]);
    alive[best] = 0;
    for (int w : g.neighbors(best))
      if (alive[w]) --deg[w];
  }
  return degen;
}

namespace {

std::vector<int> greedy_order(const Graph& g) {
  // peel minimum degree, filling positions from the back
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> order(n, -1);
  for (int slot = n - 1; slot >= 0; --slot) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
    order[slot] = best;
    alive[best] = 0;
    for (int w : g.neighbors(best))
      if (alive[w]) --deg[w];
  }
  return order;
}

// Exact search: build the order smallest-first; placing u adds u to the
// weak reach of everything it can reach through unplaced vertices, so the
// partial maximum only grows and prunes against the incumbent.
struct WcolSearch {
  const Graph& g;
  int s;
  int n;
  std::vector<char> placed;
  std::vector<int> counts;
  std::vector<int> order;
  int best_value;
  std::vector<int> best_order;

  WcolSearch(const Graph& gg, int ss, int incumbent,
             std::vector<int> incumbent_order)
      : g(gg),
        s(ss),
        n(gg.vertex_count()),
        placed(n, 0),
        counts(n, 0),
        best_value(incumbent),
        best_order(std::move(incumbent_order)) {}

  std::vector<int> reach_targets(int u) {
    // vertices reachable from u within s through unplaced vertices
    std::vector<int> dist(n, kUnreachable);
    dist[u] = 0;
    std::vector<int> queue{u};
    std::vector<int> hit;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      hit.push_back(x);
      if (dist[x] == s) continue;
      for (int w : g.neighbors(x))
        if (dist[w] == kUnreachable && !placed[w]) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
    }
    return hit;
  }

  void run(int current_max) {
    if (static_cast<int>(order.size()) == n) {
      if (current_max < best_value) {
        best_value = current_max;
        best_order = order;
      }
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (placed[u]) continue;
      auto hit = reach_targets(u);
      int new_max = current_max;
      for (int v : hit) new_max = std::max(new_max, counts[v] + 1);
      if (new_max >= best_value) continue;  // cannot improve
      placed[u] = 1;
      order.push_back(u);
      for (int v : hit) ++counts[v];
      run(new_max);
      for (int v : hit) --counts[v];
      order.pop_back();
      placed[u] = 0;
    }
  }
};

}  // namespace

WcolResult wcol(const Graph& g, int s, WcolMode mode, const WcolCaps& caps) {
  if (s < 0) throw InputError("wcol: s must be >= 0");
  const int n = g.vertex_count();
  if (n == 0) return {0, {}};
  if (s == 0) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    return {1, id};  // WReach_0 is always {v}
  }
  std::vector<int> greedy = greedy_order(g);
  int greedy_value = max_wreach({g, greedy}, s);
  if (mode == WcolMode::greedy) return {greedy_value, greedy};
  if (n > caps.max_exact_n)
    throw ResourceError("wcol: exact search capped at n <= " +
                        std::to_string(caps.max_exact_n));
  WcolSearch search(g, s, greedy_value, greedy);
  search.run(0);
  return {search.best_value, search.best_order};
}

bool wcol_separator_check(const OrderedGraph& og, const VertexSet& X, int y,
                          int r) {
  const Graph& g = og.graph;
  const int n = g.vertex_count();
  if (y < 0 || y >= n) throw InputError("wcol_separator_check: bad vertex");

  VertexSet wr_y = wreach(og, y, r);
  VertexSet wr_x;
  for (int x : X) wr_x = wr_x.unions(wreach(og, x, r));
  VertexSet common = wr_x.intersect(wr_y);

  // enumerate all simple paths of length <= r starting at y; whenever the
  // far endpoint lies in X, the path must meet `common`
  bool ok = true;
  std::vector<int> path{y};
  std::vector<char> used(n, 0);
  used[y] = 1;
  auto dfs = [&](auto&& self) -> void {
    if (!ok) return;
    int tail = path.back();
    if (X.contains(tail)) {
      bool hit = false;
      for (int v : path)
        if (common.contains(v)) hit = true;
      if (!hit) ok = false;
    }
    if (static_cast<int>(path.size()) > r) return;
    for (int w : g.neighbors(tail)) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = 0;
    }
  };
  dfs(dfs);
  return ok;
}

std::string sparse_diagnostics(const Graph& g, const VertexSet& X, int r,
                               const ClosureOptions& opts) {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["r"] = r;
  j["max_projection_size"] = max_projection_size(g, X, r);
  VertexSet closed = closure(g, X, r, opts);
  j["closure_growth"] =
      X.empty() ? 0.0
                : static_cast<double>(closed.size()) / X.size();
  j["closure_max_projection"] = max_projection_size(g, closed, r);
  j["wcol_greedy"] = wcol(g, r, WcolMode::greedy).value;
  VertexSet improved = exchange_improve(g, VertexSet::full(g.vertex_count()),
                                        VertexSet::full(g.vertex_count()), 1);
  j["exchange_steps"] =
      VertexSet::full(g.vertex_count()).size() - improved.size();
  return j.dump(2);
}

}  // namespace cdskernel
