#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdskernel/vertex_set.hpp"

namespace cdskernel {

inline constexpr int kUnreachable = -1;
inline constexpr int kNoCap = std::numeric_limits<int>::max();

// Soft cap on graph size; guards the exhaustive routines from accidental
// misuse on large inputs. Configurable at runtime.
int graph_vertex_cap();
void set_graph_vertex_cap(int cap);

// Simple undirected graph with dense vertex ids 0..n-1 and sorted adjacency
// lists. Immutable after construction; rejects self-loops and parallel edges.
class Graph {
public:
  Graph() = default;  // empty graph
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct SubdivisionSpec {
  Graph base;
  int p = 1;  // each edge becomes a path of length exactly p
};

// BFS from `sources` where vertices of `avoid` may be reached as endpoints
// but are never expanded (paths internally avoid them). Distances beyond
// `cap` are reported as kUnreachable.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const VertexSet& avoid, int cap = kNoCap);

// Plain single-source BFS, no avoided vertices, no cap.
std::vector<int> bfs_distances(const Graph& g, int source);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new id -> id in the host graph
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// True iff G[s] has exactly one connected component. The empty set counts
// as connected by convention.
bool is_connected(const Graph& g, const VertexSet& s);

int component_count(const Graph& g, const VertexSet& s);

// Exact p-subdivision: base vertices keep their ids, every base edge
// becomes an induced path of length exactly p through fresh vertices.
Graph exact_subdivision(const SubdivisionSpec& spec);

// G ⊙ K_t: vertex (v, a) gets id v*t + a; (u,a) ~ (v,b) iff uv is an edge
// or u = v and a != b.
Graph lexicographic_product(const Graph& g, int t);

// Exhaustive K_{d,d}-subgraph test. Intended for small d and desk-scale n.
bool contains_biclique(const Graph& g, int d);

// --- Generators (all deterministic; randomness flows from the seed) ---

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);

// k x m grid plus one apex per row adjacent to that whole row. Grid vertex
// (i, j), 0-based, has id i*m + j; apex of row i has id k*m + i.
Graph grid_apex(int k, int m);

// Connected d-degenerate graph: vertices arrive one at a time, each picking
// between 1 and d random earlier neighbors.
Graph random_degenerate(int n, int d, std::uint64_t seed);

// Bipartite incidence graph: element ids 0..universe-1, family j gets id
// universe+j and a random non-empty subset of elements.
Graph random_bipartite_incidence(int universe, int families,
                                 std::uint64_t seed);

// --- Edge-list serialization: first line "n m", then m lines "u v", u < v.

void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace cdskernel
