#include "cdskernel/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "cdskernel/errors.hpp"

namespace cdskernel {

namespace {
std::atomic<int> g_vertex_cap{100000};
}

int graph_vertex_cap() { return g_vertex_cap.load(); }
void set_graph_vertex_cap(int cap) { g_vertex_cap.store(cap); }

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw InputError("graph: negative vertex count");
  if (n > graph_vertex_cap())
    throw ResourceError("graph: vertex count exceeds configured cap");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("graph: edge endpoint out of range");
    if (u == v) throw InputError("graph: self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n_; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw InputError("graph: parallel edge");
  }
  m_ = static_cast<int>(edges.size());
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw InputError("graph: vertex id out of range");
  return adj_[v];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  if (v < 0 || v >= n_) throw InputError("graph: vertex id out of range");
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const VertexSet& avoid, int cap) {
  const int n = g.vertex_count();
  for (int s : sources) {
    if (s < 0 || s >= n) throw InputError("bfs: source out of range");
    if (avoid.contains(s)) throw InputError("bfs: source in avoid set");
  }
  std::vector<int> dist(n, kUnreachable);
  std::vector<char> is_avoid = avoid.marks(n);
  std::deque<int> queue;
  for (int s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] >= cap) break;
    for (int w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      // avoid vertices are valid endpoints but never internal
      if (!is_avoid[w]) queue.push_back(w);
    }
  }
  if (cap != kNoCap)
    for (int& d : dist)
      if (d > cap) d = kUnreachable;
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  return bfs_distances(g, VertexSet{source}, VertexSet{}, kNoCap);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  std::vector<int> to_new(n, -1);
  std::vector<int> to_original;
  for (int v : s) {
    if (v < 0 || v >= n) throw InputError("induced_subgraph: id out of range");
    to_new[v] = static_cast<int>(to_original.size());
    to_original.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : s)
    for (int w : g.neighbors(v))
      if (v < w && to_new[w] >= 0) edges.emplace_back(to_new[v], to_new[w]);
  return {Graph(static_cast<int>(to_original.size()), edges),
          std::move(to_original)};
}

int component_count(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  std::vector<char> in = s.marks(n);
  std::vector<char> seen(n, 0);
  int comps = 0;
  std::deque<int> queue;
  for (int start : s) {
    if (seen[start]) continue;
    ++comps;
    seen[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u))
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
  }
  return comps;
}

bool is_connected(const Graph& g, const VertexSet& s) {
  return component_count(g, s) <= 1;
}

Graph exact_subdivision(const SubdivisionSpec& spec) {
  if (spec.p < 1) throw InputError("exact_subdivision: p must be >= 1");
  const Graph& base = spec.base;
  const int p = spec.p;
  if (p == 1) return base;
  auto base_edges = base.edges();
  int n = base.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(base_edges.size()) * p);
  for (auto [u, v] : base_edges) {
    int prev = u;
    for (int i = 0; i < p - 1; ++i) {
      int fresh = n++;
      edges.emplace_back(prev, fresh);
      prev = fresh;
    }
    edges.emplace_back(prev, v);
  }
  return Graph(n, edges);
}

Graph lexicographic_product(const Graph& g, int t) {
  if (t < 1) throw InputError("lexicographic_product: t must be >= 1");
  if (t == 1) return g;
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b) edges.emplace_back(u * t + a, v * t + b);
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b) edges.emplace_back(v * t + a, v * t + b);
  return Graph(n * t, edges);
}

namespace {

bool biclique_search(const Graph& g, int d, std::vector<int>& side,
                     std::vector<int>& common, int next) {
  if (static_cast<int>(side.size()) == d)
    return static_cast<int>(common.size()) >= d;
  // prune: not enough candidates left to finish the side
  const int n = g.vertex_count();
  for (int v = next; v < n; ++v) {
    if (g.degree(v) < d) continue;
    std::vector<int> narrowed;
    if (side.empty()) {
      auto nb = g.neighbors(v);
      narrowed.assign(nb.begin(), nb.end());
    } else {
      auto nb = g.neighbors(v);
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                            std::back_inserter(narrowed));
    }
    if (static_cast<int>(narrowed.size()) < d) continue;
    side.push_back(v);
    std::swap(common, narrowed);
    if (biclique_search(g, d, side, common, v + 1)) return true;
    std::swap(common, narrowed);
    side.pop_back();
  }
  return false;
}

}  // namespace

bool contains_biclique(const Graph& g, int d) {
  if (d < 1) throw InputError("contains_biclique: d must be >= 1");
  // One side of K_{d,d} is a d-subset whose common neighborhood has size
  // >= d. No vertex is adjacent to itself, so the two sides are disjoint.
  std::vector<int> side, common;
  return biclique_search(g, d, side, common, 0);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle_graph: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid_graph: bad dimensions");
  std::vector<std::pair<int, int>> edges;
  auto id = [cols](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  return Graph(rows * cols, edges);
}

Graph grid_apex(int k, int m) {
  if (k < 1 || m < 1) throw InputError("grid_apex: bad dimensions");
  std::vector<std::pair<int, int>> edges;
  auto id = [m](int i, int j) { return i * m + j; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) {
      if (j + 1 < m) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < k) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) edges.emplace_back(k * m + i, id(i, j));
  return Graph(k * m + k, edges);
}

Graph random_degenerate(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw InputError("random_degenerate: bad parameters");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    int want = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
    want = std::min(want, v);
    std::vector<int> pool(v);
    for (int i = 0; i < v; ++i) pool[i] = i;
    for (int picked = 0; picked < want; ++picked) {
      std::size_t idx = rng() % pool.size();
      edges.emplace_back(pool[idx], v);
      pool.erase(pool.begin() + static_cast<long>(idx));
    }
  }
  return Graph(n, edges);
}

Graph random_bipartite_incidence(int universe, int families,
                                 std::uint64_t seed) {
  if (universe < 1 || families < 1)
    throw InputError("random_bipartite_incidence: bad parameters");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < families; ++j) {
    int fam = universe + j;
    bool any = false;
    for (int e = 0; e < universe; ++e)
      if (rng() % 2 == 0) {
        edges.emplace_back(e, fam);
        any = true;
      }
    if (!any) edges.emplace_back(static_cast<int>(rng() % universe), fam);
  }
  return Graph(universe + families, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw InputError("edge list: missing header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw InputError("edge list: truncated");
    if (u >= v) throw InputError("edge list: expected u < v");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);  // constructor rejects duplicates and self-loops
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path);
  write_edge_list(out, g);
}

}  // namespace cdskernel
