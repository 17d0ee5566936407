#include "cdskernel/reductions.hpp"

#include <algorithm>

#include <json.hpp>

#include "cdskernel/errors.hpp"

namespace cdskernel {

RdsReduction reduce_to_rds(const SetCoverInstance& sc, int r) {
  if (r < 1) throw InputError("reduce_to_rds: r must be >= 1");
  if (sc.k < 0) throw InputError("reduce_to_rds: negative budget");
  const int u = sc.universe_size;
  const int f = static_cast<int>(sc.families.size());

  RdsReduction red;
  red.r = r;
  red.k_prime = sc.k + 1;

  std::vector<char> coverable(u, 0);
  for (const auto& fam : sc.families)
    for (int e : fam) {
      if (e < 0 || e >= u) throw InputError("reduce_to_rds: bad element id");
      coverable[e] = 1;
    }
  bool all_coverable = true;
  for (int e = 0; e < u; ++e) all_coverable = all_coverable && coverable[e];

  if (!all_coverable) {
    // vacuously negative: k'+1 disjoint base edges subdivide into k'+1
    // paths, each demanding its own dominator
    red.uncoverable_element = true;
    int pairs = red.k_prime + 1;
    std::vector<std::pair<int, int>> base_edges;
    for (int i = 0; i < pairs; ++i) base_edges.emplace_back(2 * i, 2 * i + 1);
    red.graph = exact_subdivision({Graph(2 * pairs, base_edges), r});
    return red;
  }

  // base: elements 0..u-1, sets u..u+f-1, guard, pendant
  const int guard = u + f;
  const int pendant = u + f + 1;
  std::vector<std::pair<int, int>> base_edges;
  for (int j = 0; j < f; ++j) {
    std::vector<int> fam = sc.families[j];
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    if (fam.empty()) throw InputError("reduce_to_rds: empty family");
    for (int e : fam) base_edges.emplace_back(e, u + j);
    base_edges.emplace_back(u + j, guard);
  }
  if (f == 0) {
    // no families: still build guard + pendant so the graph is non-empty
  }
  base_edges.emplace_back(guard, pendant);
  Graph base(u + f + 2, base_edges);
  red.graph = exact_subdivision({base, r});
  for (int e = 0; e < u; ++e) red.element_vertices.push_back(e);
  for (int j = 0; j < f; ++j) red.set_vertices.push_back(u + j);
  red.guard = guard;
  red.pendant = pendant;
  return red;
}

long long connected_rds_budget(const RdsReduction& red) {
  return (2LL * red.r + 1) * red.k_prime;
}

// ---------------------------------------------------------------------------
// H_p membership
// ---------------------------------------------------------------------------

bool membership_check_Hp(const Graph& g, int p) {
  if (p < 1) throw InputError("membership_check_Hp: p must be >= 1");
  if (p == 1) return true;  // the graph is its own base
  const int n = g.vertex_count();

  std::vector<char> is_branch(n, 0);
  for (int v = 0; v < n; ++v) is_branch[v] = g.degree(v) != 2;

  // chains between branch vertices; parallel length-p chains would force a
  // multigraph base, self-chains shorter than 3p a loop or parallel pair
  std::vector<char> visited(n, 0);
  std::vector<std::pair<int, int>> unit_pairs;  // chains of length exactly p
  for (int v = 0; v < n; ++v) {
    if (!is_branch[v]) continue;
    for (int w : g.neighbors(v)) {
      if (is_branch[w]) {
        if (v < w) {  // chain of length 1
          if (p != 1) return false;
        }
        continue;
      }
      if (visited[w]) continue;
      // walk the degree-2 chain starting with edge v-w
      int prev = v, cur = w, len = 1;
      while (!is_branch[cur]) {
        visited[cur] = 1;
        int next = -1;
        for (int x : g.neighbors(cur))
          if (x != prev) next = x;
        prev = cur;
        cur = next;
        ++len;
      }
      if (len % p != 0) return false;
      if (cur == v) {
        if (len < 3 * p) return false;  // base cycle needs 3 vertices
      } else if (len == p) {
        unit_pairs.emplace_back(std::min(v, cur), std::max(v, cur));
      }
    }
  }
  std::sort(unit_pairs.begin(), unit_pairs.end());
  if (std::adjacent_find(unit_pairs.begin(), unit_pairs.end()) !=
      unit_pairs.end())
    return false;  // parallel base edges

  // remaining unvisited degree-2 vertices lie on pure cycles
  for (int v = 0; v < n; ++v) {
    if (is_branch[v] || visited[v]) continue;
    int prev = v, cur = g.neighbors(v)[0], len = 1;
    visited[v] = 1;
    while (cur != v) {
      visited[cur] = 1;
      int next = -1;
      for (int x : g.neighbors(cur))
        if (x != prev) next = x;
      prev = cur;
      cur = next;
      ++len;
    }
    if (len % p != 0 || len < 3 * p) return false;
  }
  return true;
}

std::string rds_role_map_json(const RdsReduction& red) {
  nlohmann::json j;
  j["schema"] = 1;
  j["element_vertices"] = red.element_vertices;
  j["set_vertices"] = red.set_vertices;
  j["guard"] = red.guard;
  j["pendant"] = red.pendant;
  j["k_prime"] = red.k_prime;
  j["r"] = red.r;
  j["uncoverable_element"] = red.uncoverable_element;
  return j.dump(2);
}

}  // namespace cdskernel
