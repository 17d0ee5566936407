// Acceptance suite: one check per shipped guarantee, one pass/fail line
// each. Exit code is the number of failed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cdskernel/biclique_free.hpp"
#include "cdskernel/distance_r.hpp"
#include "cdskernel/framework.hpp"
#include "cdskernel/graph.hpp"
#include "cdskernel/oracles.hpp"
#include "cdskernel/reductions.hpp"
#include "cdskernel/report.hpp"
#include "cdskernel/sparse_structure.hpp"

using namespace cdskernel;

namespace {

OracleCaps big_caps() {
  OracleCaps caps;
  caps.max_subset_n = 64;
  caps.max_groups = 40;
  caps.max_dp_states = 200'000'000;
  caps.max_enumeration = 80'000'000;
  return caps;
}

Graph random_connected(std::mt19937_64& rng, int min_n, int max_n) {
  int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
  int d = 1 + static_cast<int>(rng() % 4);
  return random_degenerate(n, d, rng());
}

// ---------------------------------------------------------------------------

bool criterion_1(std::string& detail) {
  std::mt19937_64 rng(101);
  int graphs = 0, families = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_connected(rng, 2, 60);
    ++graphs;
    VertexSet D = VertexSet::full(g.vertex_count());
    for (int t = 1; t <= 5; ++t) {
      auto fam = covering_family(g, D, t);
      ++families;
      VertexSet unioned;
      int total = 0;
      for (const auto& part : fam.parts) {
        if (part.size() > 2 * t) return false;
        if (!is_connected(g, part)) return false;
        if (!part.subset_of(D)) return false;
        unioned = unioned.unions(part);
        total += part.size();
      }
      if (!(unioned == D)) return false;
      if (static_cast<int>(fam.parts.size()) > D.size() / t + 1) return false;
      if (total * t > (t + 1) * D.size() + t) return false;
    }
  }
  detail = std::to_string(graphs) + " graphs, " + std::to_string(families) +
           " families, all four bounds exact";
  return true;
}

bool criterion_2(std::string& detail) {
  std::mt19937_64 rng(202);
  int cases = 0;
  while (cases < 200) {
    Graph g = random_connected(rng, 3, 30);
    const int n = g.vertex_count();
    int r = 1 + static_cast<int>(rng() % 2);
    VertexSet D;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) D.insert(v);
    while (true) {
      auto dist = bfs_distances(g, D, VertexSet{}, r);
      int missing = -1;
      for (int v = 0; v < n; ++v)
        if (dist[v] == kUnreachable) {
          missing = v;
          break;
        }
      if (missing < 0) break;
      D.insert(missing);
    }
    int p = component_count(g, D);
    auto Q = connect_dominator(g, VertexSet::full(n), D, r);
    if (!is_connected(g, D.unions(Q))) return false;
    if (Q.size() > 2 * r * p) return false;
    ++cases;
  }
  detail = "200 randomized (g, D) cases, r in {1,2}, |Q| <= 2rp exact";
  return true;
}

struct CoreInstance {
  Graph g;
  int k;
  int d;
  VertexSet core;
  std::vector<int> removals;
};

std::vector<CoreInstance> core_instances() {
  std::vector<CoreInstance> out;
  std::mt19937_64 rng(303);
  // stars and stars with a few leaf-leaf edges: ds = 1, removals guaranteed
  for (int i = 0; i < 40; ++i) {
    int leaves = 6 + static_cast<int>(rng() % 16);  // n <= 22 incl. center
    leaves = std::min(leaves, 21);
    std::vector<std::pair<int, int>> edges;
    for (int l = 1; l <= leaves; ++l) edges.emplace_back(0, l);
    if (i % 2 == 1 && leaves >= 4) {
      // one leaf-leaf edge keeps the graph K_{2,2}-free (no 4-cycle)
      edges.emplace_back(1, 2);
    }
    Graph g(leaves + 1, edges);
    int d = 2;
    out.push_back({g, 1, d, {}, {}});
  }
  // random trees and sparse graphs, k in 1..3, d matching freeness
  while (out.size() < 100) {
    int n = 8 + static_cast<int>(rng() % 15);
    Graph g = random_degenerate(n, 1 + static_cast<int>(rng() % 2), rng());
    int d = contains_biclique(g, 2) ? 3 : 2;
    if (contains_biclique(g, d)) continue;
    int k = 1 + static_cast<int>(rng() % 3);
    out.push_back({g, k, d, {}, {}});
  }
  for (auto& inst : out) {
    auto res = compute_core(inst.g, inst.k, inst.d);
    if (res.rejected) {
      inst.core = VertexSet::full(inst.g.vertex_count());
      continue;
    }
    inst.core = res.core;
    inst.removals = res.removals;
  }
  return out;
}

bool criterion_3(const std::vector<CoreInstance>& instances,
                 std::string& detail) {
  int removals = 0;
  for (const auto& inst : instances) {
    VertexSet z = VertexSet::full(inst.g.vertex_count());
    for (int removed : inst.removals) {
      z.erase(removed);
      if (!is_domination_core(inst.g, z, inst.k, 1, big_caps())) return false;
      ++removals;
    }
  }
  if (removals == 0) return false;
  detail = std::to_string(instances.size()) + " instances, " +
           std::to_string(removals) + " oracle-checked removals, 0 failures";
  return true;
}

bool criterion_4(const std::vector<CoreInstance>& instances,
                 std::string& detail) {
  int checked = 0;
  for (const auto& inst : instances) {
    auto part = core_partition(inst.g, inst.core);
    long long bound = 2LL * inst.d;
    for (int i = 0; i < inst.d; ++i) bound *= std::max(1, inst.core.size());
    if (part.class_count() > bound) return false;
    ++checked;
  }
  detail = std::to_string(checked) + " cores, index bounded by 2d |Z|^d";
  return true;
}

struct RatioInstance {
  Graph g;
  int k;
  int d;
  int opt;  // oracle cds
};

std::vector<RatioInstance> ratio_instances() {
  std::vector<RatioInstance> out;
  std::mt19937_64 rng(505);
  auto add = [&](Graph g, int d, int max_k) {
    const int n = g.vertex_count();
    if (n > 24) return;
    if (contains_biclique(g, d)) return;
    auto opt = exact_min_dominator(
        {g, VertexSet::full(n), 1, n, true, big_caps()});
    if (!opt.feasible || opt.size > max_k) return;
    out.push_back({g, max_k, d, opt.size});
  };
  for (int leaves = 6; leaves <= 14 && out.size() < 50; ++leaves)
    add(star_graph(leaves), 2, 4);  // opt 1
  // double brooms: opt 2
  for (int trial = 0; trial < 10 && out.size() < 50; ++trial) {
    int n = 10 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int v = 2; v < n; ++v) edges.emplace_back(v, rng() % 2);
    add(Graph(n, edges), 2, 4);
  }
  // caterpillars with 3-4 spine vertices: opt 3-4, kept small for the
  // group-Steiner stage
  for (int trial = 0; trial < 14 && out.size() < 50; ++trial) {
    int spine = 3 + static_cast<int>(rng() % 2);
    int n = spine;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    int budget = 12 + static_cast<int>(rng() % 4);
    while (n < budget) {
      edges.emplace_back(n, rng() % spine);
      ++n;
    }
    // leaves on both ends force the whole spine into any optimum
    edges.emplace_back(n, 0);
    edges.emplace_back(n + 1, spine - 1);
    add(Graph(n + 2, edges), 2, 4);
  }
  add(cycle_graph(5), 2, 4);   // opt 3
  add(cycle_graph(6), 2, 4);   // opt 4
  add(path_graph(5), 2, 4);    // opt 3
  add(path_graph(6), 2, 4);    // opt 4
  add(grid_apex(2, 3), 3, 4);  // opt 4, needs d = 3
  add(grid_apex(2, 4), 3, 4);
  while (out.size() < 50) {
    Graph g = random_degenerate(8 + static_cast<int>(rng() % 9), 1, rng());
    add(g, 2, 4);
  }
  return out;
}

bool criterion_5(const std::vector<RatioInstance>& instances,
                 std::string& detail) {
  int checked = 0, fallbacks = 0, main_path = 0;
  for (const auto& inst : instances) {
    for (double eps : {0.5, 1.0, 2.0}) {
      auto out = psaks_kdd(inst.g, inst.k, eps, inst.d, big_caps());
      if (out.trivial_negative) return false;  // opt <= k, must not reject
      VertexSet reduced_solution;
      if (out.exact_fallback) {
        ++fallbacks;
        reduced_solution = VertexSet::full(out.reduced.graph.vertex_count());
      } else {
        ++main_path;
        auto opt_red = exact_min_dominator(
            {out.reduced.graph,
             VertexSet::full(out.reduced.graph.vertex_count()), 1,
             out.reduced.graph.vertex_count(), true, big_caps()});
        if (!opt_red.feasible) return false;
        reduced_solution = opt_red.dominator;
      }
      auto lifted =
          lift_solution({inst.g, VertexSet::full(inst.g.vertex_count()),
                         inst.k, 1},
                        out, reduced_solution);
      if (!lifted.valid) return false;
      if (lifted.value > (1.0 + eps) * inst.opt + 1e-9) return false;
      ++checked;
    }
  }
  detail = std::to_string(instances.size()) + " instances x 3 eps (" +
           std::to_string(checked) + " runs: " + std::to_string(main_path) +
           " marked, " + std::to_string(fallbacks) +
           " solved in the small-optimum regime)";
  return true;
}

bool criterion_6(const std::vector<CoreInstance>& instances,
                 std::string& detail) {
  int checked = 0;
  for (const auto& inst : instances) {
    auto out = ds_bikernel(inst.g, inst.core, inst.k);
    auto before = exact_min_dominator({inst.g, inst.core, 1, inst.k, false,
                                       big_caps()});
    auto after = exact_min_dominator({out.reduced.graph, out.reduced.Z, 1,
                                      inst.k, false, big_caps()});
    if (before.feasible != after.feasible) return false;
    if (before.feasible && before.size != after.size) return false;
    ++checked;
  }
  detail = std::to_string(checked) + " instances, Z-domination exact";
  return true;
}

bool criterion_7(std::string& detail) {
  std::mt19937_64 rng(707);
  int instances = 0, subsets = 0, repaired = 0;
  while (instances < 30) {
    int n = 6 + static_cast<int>(rng() % 11);
    Graph g = random_degenerate(n, 1 + static_cast<int>(rng() % 3), rng());
    int q = 2 + static_cast<int>(rng() % 3);
    int r = 1 + static_cast<int>(rng() % 3);
    VertexSet X;
    int want = std::min(n, 3 + static_cast<int>(rng() % 4));
    while (X.size() < want) X.insert(static_cast<int>(rng() % n));
    auto res = tree_closure(g, X, q, r, big_caps());
    repaired += res.repaired_subsets;
    if (!X.subset_of(res.vertices)) return false;
    auto sub = induced_subgraph(g, res.vertices);
    std::vector<int> to_new(n, -1);
    for (int i = 0; i < sub.graph.vertex_count(); ++i)
      to_new[sub.to_original[i]] = i;

    std::vector<int> pool(X.begin(), X.end());
    std::vector<int> pick;
    bool ok = true;
    auto rec = [&](auto&& self, std::size_t next) -> void {
      if (!ok) return;
      if (!pick.empty()) {
        auto in_g = exact_steiner_tree(g, VertexSet(pick), big_caps());
        if (in_g.feasible() && in_g.size <= r * q) {
          VertexSet mapped;
          for (int v : pick) mapped.insert(to_new[v]);
          auto inside = exact_steiner_tree(sub.graph, mapped, big_caps());
          if (!inside.feasible() || inside.size != in_g.size) ok = false;
          ++subsets;
        }
      }
      if (static_cast<int>(pick.size()) == q) return;
      for (std::size_t i = next; i < pool.size(); ++i) {
        pick.push_back(pool[i]);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
    if (!ok) return false;
    ++instances;
  }
  detail = "30 instances, " + std::to_string(subsets) +
           " qualifying subsets exact (" + std::to_string(repaired) +
           " patched during construction)";
  return true;
}

struct RdsRun {
  KernelOutput out;
  Graph g;
  int k;
  int r;
  VertexSet core_orig;
};

bool criterion_8(std::vector<RdsRun>& runs, std::string& detail) {
  std::mt19937_64 rng(808);
  int checked = 0, main_path = 0;
  std::vector<std::tuple<Graph, int, int>> roster;  // graph, r, k
  roster.emplace_back(star_graph(8), 1, 1);
  roster.emplace_back(star_graph(12), 1, 2);
  roster.emplace_back(path_graph(5), 1, 3);
  roster.emplace_back(cycle_graph(5), 1, 3);
  roster.emplace_back(path_graph(7), 2, 2);
  roster.emplace_back(cycle_graph(10), 2, 2);
  roster.emplace_back(cycle_graph(12), 2, 3);
  roster.emplace_back(grid_apex(2, 4), 1, 3);
  roster.emplace_back(grid_apex(2, 5), 2, 2);
  roster.emplace_back(grid_apex(3, 3), 2, 2);
  while (roster.size() < 30) {
    int n = 8 + static_cast<int>(rng() % 13);
    Graph g = random_degenerate(n, 1 + static_cast<int>(rng() % 2), rng());
    int r = 1 + static_cast<int>(rng() % 2);
    auto opt = exact_min_dominator(
        {g, VertexSet::full(n), r, n, true, big_caps()});
    if (!opt.feasible || opt.size > 3) continue;
    roster.emplace_back(g, r, std::max(opt.size, 1));
  }
  for (auto& [g, r, k] : roster) {
    const int n = g.vertex_count();
    auto opt_orig = exact_min_dominator(
        {g, VertexSet::full(n), r, n, true, big_caps()});
    if (!opt_orig.feasible || opt_orig.size > k) continue;  // want OPT <= k
    int opt_value = std::min(opt_orig.size, k + 1);
    for (double alpha : {2.0, 3.0}) {
      RKernelParams params{r, alpha, 0};
      auto out = r_lossy_kernel(g, k, params,
                                exhaustive_r_core_provider(big_caps()),
                                big_caps());
      if (out.trivial_negative) return false;
      VertexSet reduced_solution;
      if (!out.exact_fallback) {
        ++main_path;
        auto opt_red = exact_min_dominator(
            {out.reduced.graph, out.reduced.Z, r,
             out.reduced.graph.vertex_count(), true, big_caps()});
        if (!opt_red.feasible) return false;
        if (opt_red.size > alpha * opt_value + 1e-9) return false;
        reduced_solution = opt_red.dominator;
        VertexSet core_orig;
        for (int z : out.reduced.Z) core_orig.insert(out.kept[z]);
        runs.push_back({out, g, k, r, core_orig});
      } else {
        auto opt_red = exact_min_dominator(
            {out.reduced.graph, out.reduced.Z, r,
             out.reduced.graph.vertex_count(), true, big_caps()});
        if (!opt_red.feasible) return false;
        if (opt_red.size > alpha * opt_value + 1e-9) return false;
        reduced_solution = opt_red.dominator;
      }
      auto lifted = r_lift({g, VertexSet::full(n), k, r}, out,
                           reduced_solution);
      if (!lifted.valid) return false;
      if (lifted.value > alpha * opt_value + 1e-9) return false;
      ++checked;
    }
  }
  if (checked < 30) return false;
  detail = std::to_string(checked) + " (instance, alpha) runs, " +
           std::to_string(main_path) + " through the marking stage";
  return true;
}

bool criterion_9(const std::vector<RdsRun>& runs, std::string& detail) {
  if (runs.empty()) return false;
  int terminals_checked = 0;
  for (const auto& run : runs) {
    const Graph& g = run.g;
    const KernelOutput& out = run.out;
    const int r = run.r;
    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < out.kept.size(); ++i)
      to_new[out.kept[i]] = static_cast<int>(i);
    // profile equality for every retained non-core vertex of the kernel
    for (int i = 0; i < out.reduced.graph.vertex_count(); ++i) {
      if (out.reduced.Z.contains(i)) continue;
      int orig = out.kept[i];
      auto p_red = profile(out.reduced.graph, i, out.reduced.Z, r);
      auto p_orig = profile(g, orig, run.core_orig, r);
      // reduced profiles never undercut the host; terminals must match
      for (auto [x, dist] : p_red.rho) {
        bool found = false;
        for (auto [xo, do_] : p_orig.rho)
          if (xo == out.kept[x] && do_ <= dist) found = true;
        if (!found) return false;
      }
    }
    // every class realized in g stays realized in the kernel
    auto classes_g = profile_classes(g, run.core_orig, r);
    auto classes_r =
        profile_classes(out.reduced.graph, out.reduced.Z, r);
    for (const auto& [key, members] : classes_g.classes) {
      bool found = false;
      for (const auto& [rkey, rmembers] : classes_r.classes) {
        std::vector<std::pair<int, int>> mapped;
        for (auto [x, dist] : rkey) mapped.emplace_back(out.kept[x], dist);
        std::sort(mapped.begin(), mapped.end());
        if (mapped == key) {
          found = true;
          // the matching class members must include a true profile copy
          bool exact = false;
          for (int v : rmembers) {
            auto p_red = profile(out.reduced.graph, v, out.reduced.Z, r);
            std::vector<std::pair<int, int>> lifted;
            for (auto [x, dist] : p_red.rho)
              lifted.emplace_back(out.kept[x], dist);
            std::sort(lifted.begin(), lifted.end());
            if (lifted == key) exact = true;
          }
          if (!exact) found = false;
        }
        if (found) break;
      }
      if (!found) return false;
      ++terminals_checked;
    }
  }
  detail = std::to_string(runs.size()) + " marked kernels, " +
           std::to_string(terminals_checked) + " classes preserved exactly";
  return true;
}

bool criterion_10(std::string& detail) {
  std::mt19937_64 rng(1010);
  int witnesses = 0;
  for (int k : {3, 4}) {
    const int m = 2 * k;
    Graph g = grid_apex(k, m);
    const int n = g.vertex_count();
    for (int i = 0; i < k; ++i) {
      for (int kept = 1; kept <= k - 1; ++kept) {
        for (int variant = 0; variant < 3; ++variant) {
          // core = everything except most of row i; the surviving row
          // vertices form a block (at most kept+2 <= k+1 < m cells of the
          // row are then within reach of the witness)
          int offset = static_cast<int>(rng() % (m - kept + 1));
          VertexSet Z = VertexSet::full(n);
          VertexSet row_core;
          for (int j = 0; j < m; ++j) {
            if (j >= offset && j < offset + kept)
              row_core.insert(i * m + j);
            else
              Z.erase(i * m + j);
          }
          // witness: all other apexes plus the surviving row-i vertices
          VertexSet D = row_core;
          for (int a = 0; a < k; ++a)
            if (a != i) D.insert(k * m + a);
          if (D.size() > 2 * k - 2) return false;
          auto dist = bfs_distances(g, D, VertexSet{}, 1);
          for (int z : Z)
            if (dist[z] == kUnreachable) return false;  // must dominate Z
          bool all = true;
          for (int v = 0; v < n; ++v)
            if (dist[v] == kUnreachable) all = false;
          if (all) return false;  // must NOT dominate G
          ++witnesses;
        }
      }
    }
  }
  detail = std::to_string(witnesses) +
           " witnesses of size <= 2k-2 dominating Z but not G";
  return true;
}

// canonical form of a set-cover instance under element relabeling
std::vector<std::uint32_t> canonical_families(int u,
                                              std::vector<std::uint32_t> fams) {
  std::vector<int> perm(u);
  for (int i = 0; i < u; ++i) perm[i] = i;
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> mapped;
    for (auto f : fams) {
      std::uint32_t g = 0;
      for (int e = 0; e < u; ++e)
        if (f >> e & 1) g |= 1u << perm[e];
      mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool criterion_11(std::string& detail) {
  OracleCaps caps = big_caps();
  std::map<int, int> mismatches;  // r -> count
  std::map<int, int> tested;
  bool membership_ok = true;

  for (int u = 0; u <= 4; ++u) {
    // all multisets of at most 4 non-empty families over u elements,
    // deduplicated up to element relabeling
    std::vector<std::vector<std::uint32_t>> family_lists;
    if (u == 0) {
      family_lists.push_back({});
    } else {
      const std::uint32_t top = (1u << u) - 1;
      std::vector<std::uint32_t> current;
      auto rec = [&](auto&& self, std::uint32_t from, int left) -> void {
        if (!current.empty()) family_lists.push_back(current);
        if (left == 0) return;
        for (std::uint32_t f = from; f <= top; ++f) {
          current.push_back(f);
          self(self, f, left - 1);  // multiset: allow repeats
          current.pop_back();
        }
      };
      rec(rec, 1, 4);
    }
    std::map<std::vector<std::uint32_t>, bool> seen;
    for (const auto& fams : family_lists) {
      auto canon = u == 0 ? fams : canonical_families(u, fams);
      if (seen.count(canon)) continue;
      seen[canon] = true;

      SetCoverInstance sc;
      sc.universe_size = u;
      for (auto f : canon) {
        std::vector<int> members;
        for (int e = 0; e < u; ++e)
          if (f >> e & 1) members.push_back(e);
        sc.families.push_back(members);
      }
      // smallest cover (or 5 = impossible within the sweep budgets)
      int cover_size = 5;
      for (int k = 0; k <= 4; ++k) {
        sc.k = k;
        if (exact_set_cover(sc, caps)) {
          cover_size = k;
          break;
        }
      }
      for (int r = 1; r <= 3; ++r) {
        sc.k = 0;
        auto red0 = reduce_to_rds(sc, r);
        if (!membership_check_Hp(red0.graph, r)) membership_ok = false;
        if (red0.uncoverable_element) {
          // the canonical negative gadget depends on k; oracle each budget
          for (int k = 0; k <= 3; ++k) {
            sc.k = k;
            auto red = reduce_to_rds(sc, r);
            if (!membership_check_Hp(red.graph, r)) membership_ok = false;
            auto res = exact_min_dominator(
                {red.graph, VertexSet::full(red.graph.vertex_count()), r,
                 red.k_prime, false, caps});
            ++tested[r];
            if (res.feasible) ++mismatches[r];  // instance is negative
          }
          continue;
        }
        // the gadget graph does not depend on k (only k' does), so one
        // oracle run covers every budget
        int ds_size = 5;
        for (int size = 0; size <= 4; ++size) {
          auto res = exact_min_dominator(
              {red0.graph, VertexSet::full(red0.graph.vertex_count()), r,
               size, false, caps});
          if (res.feasible) {
            ds_size = res.size;
            break;
          }
        }
        for (int k = 0; k <= 3; ++k) {
          bool sc_positive = cover_size <= k;
          bool rds_positive = ds_size <= k + 1;
          ++tested[r];
          if (sc_positive != rds_positive) ++mismatches[r];
        }
      }
    }
  }

  std::ostringstream os;
  bool pass = membership_ok;
  for (int r = 1; r <= 3; ++r) {
    os << "r=" << r << ": " << mismatches[r] << "/" << tested[r]
       << " mismatches; ";
    if (mismatches[r] != 0) pass = false;
  }
  os << (membership_ok ? "all outputs in H_r" : "membership violations");
  detail = os.str();
  return pass;
}

bool criterion_12(std::string& detail) {
  std::mt19937_64 rng(1212);
  // (a) exact wcol_1 = degeneracy + 1 over an n <= 8 roster
  std::vector<Graph> roster;
  for (int n = 2; n <= 8; ++n) roster.push_back(path_graph(n));
  for (int n = 3; n <= 8; ++n) roster.push_back(cycle_graph(n));
  for (int l = 2; l <= 7; ++l) roster.push_back(star_graph(l));
  for (int n = 3; n <= 6; ++n) roster.push_back(complete_graph(n));
  roster.push_back(grid_graph(2, 3));
  roster.push_back(grid_graph(2, 4));
  for (int t = 0; t < 30; ++t)
    roster.push_back(
        random_degenerate(4 + static_cast<int>(rng() % 5), 2, rng()));
  for (const auto& g : roster) {
    auto res = wcol(g, 1, WcolMode::exact);
    if (res.value != degeneracy(g) + 1) return false;
  }

  // (b) wcol_s(G o K_t) <= t * wcol_s(G): exact left side when the product
  // fits the exact cap, otherwise via the product order induced by the
  // optimal base order (a certified upper bound on the exact value)
  int lex_checks = 0;
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);  // n <= 6
    Graph g = random_degenerate(n, 2, rng());
    const int t = 2;
    Graph prod = lexicographic_product(g, t);
    for (int s = 1; s <= 2; ++s) {
      auto base = wcol(g, s, WcolMode::exact);
      int product_value;
      if (prod.vertex_count() <= 9) {
        product_value = wcol(prod, s, WcolMode::exact).value;
      } else {
        std::vector<int> order;
        for (int v : base.order)
          for (int a = 0; a < t; ++a) order.push_back(v * t + a);
        product_value = max_wreach({prod, order}, s);
      }
      if (product_value > t * base.value) return false;
      ++lex_checks;
    }
  }

  // (c) the separator lemma on all enumerated paths, 50 random orders
  int sep_checks = 0;
  while (sep_checks < 50) {
    int n = 5 + static_cast<int>(rng() % 6);  // n <= 10
    Graph g = random_degenerate(n, 2, rng());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet X;
    while (X.size() < 1 + static_cast<int>(rng() % 3))
      X.insert(static_cast<int>(rng() % n));
    int y = static_cast<int>(rng() % n);
    int r = 1 + static_cast<int>(rng() % 3);
    if (!wcol_separator_check({g, order}, X, y, r)) return false;
    ++sep_checks;
  }
  detail = std::to_string(roster.size()) + " degeneracy checks, " +
           std::to_string(lex_checks) + " product bounds, " +
           std::to_string(sep_checks) + " separator orders";
  return true;
}

bool criterion_13(std::string& detail) {
  std::vector<RunConfig> configs;
  {
    RunConfig c;
    c.pipeline = "cds-framework";
    c.generator = "grid_apex:2,4";
    c.k = 4;
    c.eps = 1.0;
    c.seed = 7;
    c.verify = true;
    configs.push_back(c);
  }
  {
    RunConfig c;
    c.pipeline = "kdd-psaks";
    c.generator = "star:10";
    c.k = 1;
    c.eps = 0.5;
    c.d = 2;
    c.seed = 9;
    c.verify = true;
    configs.push_back(c);
  }
  {
    RunConfig c;
    c.pipeline = "rds-nowhere-dense";
    c.generator = "cycle:10";
    c.k = 2;
    c.r = 2;
    c.alpha = 3.0;
    c.seed = 11;
    c.verify = true;
    configs.push_back(c);
  }
  {
    RunConfig c;
    c.pipeline = "ds-bikernel";
    c.generator = "random_degenerate:12,2";
    c.k = 3;
    c.seed = 13;
    c.verify = true;
    configs.push_back(c);
  }
  for (const auto& c : configs) {
    auto first = run(c);
    auto second = run(c);
    if (first.report_json != second.report_json) return false;
    if (first.exit_code != second.exit_code) return false;
  }
  // sweeps too
  RunConfig base;
  base.pipeline = "cds-framework";
  base.generator = "star:7";
  base.seed = 3;
  SweepGrid grid;
  grid.k = {1, 2};
  grid.r = {1};
  grid.d = {2};
  grid.eps = {0.5, 1.0};
  grid.alpha = {2.0};
  if (sweep(base, grid) != sweep(base, grid)) return false;
  detail = "4 pipelines + 1 sweep re-run byte-identical";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Criterion> results;
  auto record = [&](int id, const std::string& name, auto&& fn) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": "
              << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << " (" << ms << " ms)" << std::endl;
    results.push_back({id, name, ok, detail});
  };

  auto cores = core_instances();
  auto ratios = ratio_instances();
  std::vector<RdsRun> rds_runs;

  record(1, "covering-family bounds", criterion_1);
  record(2, "connector bound |Q| <= 2rp", criterion_2);
  record(3, "biclique-free core removals stay cores",
         [&](std::string& d) { return criterion_3(cores, d); });
  record(4, "neighborhood class bound 2d|Z|^d",
         [&](std::string& d) { return criterion_4(cores, d); });
  record(5, "end-to-end CDS ratio (1+eps)",
         [&](std::string& d) { return criterion_5(ratios, d); });
  record(6, "DS bi-kernel exactness",
         [&](std::string& d) { return criterion_6(cores, d); });
  record(7, "tree closure preserves small Steiner optima", criterion_7);
  record(8, "nowhere-dense pipeline ratio alpha",
         [&](std::string& d) { return criterion_8(rds_runs, d); });
  record(9, "profile preservation in reduced graphs",
         [&](std::string& d) { return criterion_9(rds_runs, d); });
  record(10, "quadratic-core counterexample mechanics", criterion_10);
  record(11, "set-cover reduction equivalence sweep", criterion_11);
  record(12, "weak coloring number sanity", criterion_12);
  record(13, "byte-identical reports", criterion_13);

  int failures = 0;
  for (const auto& r : results)
    if (!r.passed) ++failures;
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) +
                                    " criterion(s) failed")
            << std::endl;
  return failures;
}
