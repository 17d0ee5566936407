#include "cdskernel/oracles.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cdskernel/errors.hpp"

namespace cdskernel {

namespace {

long long binomial_sum(int n, int k) {
  long long total = 0, c = 1;
  for (int i = 0; i <= std::min(k, n); ++i) {
    total += c;
    if (total > (1LL << 40)) return total;
    c = c * (n - i) / (i + 1);
  }
  return total;
}

}  // namespace

std::vector<std::uint64_t> coverage_masks(const Graph& g,
                                          const VertexSet& targets,
                                          int radius) {
  const int n = g.vertex_count();
  if (n > 64) throw ResourceError("coverage_masks: graph larger than 64");
  if (targets.size() > 64)
    throw ResourceError("coverage_masks: too many targets");
  std::vector<std::uint64_t> cover(n, 0);
  int idx = 0;
  for (int z : targets) {
    auto dist = bfs_distances(g, VertexSet{z}, VertexSet{}, radius);
    for (int v = 0; v < n; ++v)
      if (dist[v] != kUnreachable) cover[v] |= std::uint64_t{1} << idx;
    ++idx;
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Group Steiner dynamic program
// ---------------------------------------------------------------------------

GroupSteinerEngine::GroupSteinerEngine(const Graph& g,
                                       std::vector<VertexSet> groups,
                                       int max_subset_size,
                                       const OracleCaps& caps)
    : graph_(g), groups_(std::move(groups)), max_subset_(max_subset_size) {
  const int n = g.vertex_count();
  const int gc = static_cast<int>(groups_.size());
  if (gc == 0) throw InputError("group steiner: no groups");
  if (gc > caps.max_groups || gc > 62)
    throw ResourceError("group steiner: too many groups");
  if (n > caps.max_steiner_n)
    throw ResourceError("group steiner: graph too large");
  max_subset_ = std::min(max_subset_, gc);
  if (max_subset_ < 1) throw InputError("group steiner: subset size < 1");

  group_of_.assign(n, -1);
  for (int gi = 0; gi < gc; ++gi) {
    if (groups_[gi].empty()) throw InputError("group steiner: empty group");
    for (int v : groups_[gi]) {
      if (v < 0 || v >= n)
        throw InputError("group steiner: vertex out of range");
      if (group_of_[v] != -1) throw InputError("group steiner: groups overlap");
      group_of_[v] = gi;
    }
  }

  // All masks with 1 <= popcount <= max_subset_, ascending.
  for (int pc = 1; pc <= max_subset_; ++pc) {
    std::uint64_t m = (std::uint64_t{1} << pc) - 1;
    const std::uint64_t limit = std::uint64_t{1} << gc;
    while (m < limit) {
      masks_.push_back(m);
      std::uint64_t c = m & (~m + 1);  // Gosper: next mask, same popcount
      std::uint64_t r = m + c;
      if (r >= limit) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  std::sort(masks_.begin(), masks_.end());
  if (static_cast<long long>(masks_.size()) * n > caps.max_dp_states)
    throw ResourceError("group steiner: DP table exceeds cap");
  run_dp();
}

int GroupSteinerEngine::mask_index(std::uint64_t mask) const {
  auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it == masks_.end() || *it != mask)
    throw InputError("group steiner: mask outside restricted family");
  return static_cast<int>(it - masks_.begin());
}

void GroupSteinerEngine::run_dp() {
  const int n = graph_.vertex_count();
  dp_.assign(masks_.size(), std::vector<int>(n, kInfSize));

  std::vector<std::vector<int>> buckets(n + 2);
  for (std::size_t mi = 0; mi < masks_.size(); ++mi) {
    const std::uint64_t m = masks_[mi];
    auto& row = dp_[mi];
    if (std::popcount(m) == 1) {
      int gi = std::countr_zero(m);
      for (int v : groups_[gi]) row[v] = 1;
    } else {
      // merge two sub-trees at a shared vertex
      const std::uint64_t low = m & (~m + 1);
      for (std::uint64_t sub = (m - 1) & m; sub > 0; sub = (sub - 1) & m) {
        if (!(sub & low)) continue;  // canonical split halves the work
        const auto& a = dp_[mask_index(sub)];
        const auto& b = dp_[mask_index(m ^ sub)];
        for (int v = 0; v < n; ++v) {
          if (a[v] >= kInfSize || b[v] >= kInfSize) continue;
          int cand = a[v] + b[v] - 1;
          if (cand < row[v]) row[v] = cand;
        }
      }
    }
    // unit-weight Dijkstra within the mask (Dial buckets)
    for (auto& b : buckets) b.clear();
    for (int v = 0; v < n; ++v)
      if (row[v] <= n) buckets[row[v]].push_back(v);
    for (int d = 0; d <= n; ++d) {
      for (std::size_t qi = 0; qi < buckets[d].size(); ++qi) {
        int v = buckets[d][qi];
        if (row[v] != d) continue;
        for (int w : graph_.neighbors(v))
          if (row[w] > d + 1) {
            row[w] = d + 1;
            if (d + 1 <= n) buckets[d + 1].push_back(w);
          }
      }
    }
  }
}

int GroupSteinerEngine::tree_size(std::uint64_t mask) const {
  if (mask == 0) throw InputError("group steiner: empty mask");
  const auto& row = dp_[mask_index(mask)];
  int best = kInfSize;
  for (int d : row) best = std::min(best, d);
  return best;
}

VertexSet GroupSteinerEngine::tree(std::uint64_t mask) const {
  int total = tree_size(mask);
  if (total >= kInfSize)
    throw InputError("group steiner: reconstructing infeasible mask");
  const int n = graph_.vertex_count();

  VertexSet out;
  auto reconstruct = [&](auto&& self, std::uint64_t m, int v) -> void {
    while (true) {
      const auto& row = dp_[mask_index(m)];
      int d = row[v];
      if (std::popcount(m) == 1) {
        int gi = std::countr_zero(m);
        if (d == 1 && group_of_[v] == gi) {
          out.insert(v);
          return;
        }
      } else {
        const std::uint64_t low = m & (~m + 1);
        std::vector<std::uint64_t> subs;
        for (std::uint64_t sub = (m - 1) & m; sub > 0; sub = (sub - 1) & m)
          if (sub & low) subs.push_back(sub);
        std::sort(subs.begin(), subs.end());
        bool split = false;
        for (std::uint64_t sub : subs) {
          const auto& a = dp_[mask_index(sub)];
          const auto& b = dp_[mask_index(m ^ sub)];
          if (a[v] < kInfSize && b[v] < kInfSize && a[v] + b[v] - 1 == d) {
            self(self, sub, v);
            self(self, m ^ sub, v);
            split = true;
            break;
          }
        }
        if (split) return;
      }
      // step along a tight edge towards smaller dp
      const auto& row2 = dp_[mask_index(m)];
      int next = -1;
      for (int w : graph_.neighbors(v))
        if (row2[w] == row2[v] - 1) {
          next = w;
          break;
        }
      if (next < 0) throw InputError("group steiner: reconstruction failed");
      out.insert(v);
      v = next;
    }
  };

  int best_v = -1;
  const auto& row = dp_[mask_index(mask)];
  for (int v = 0; v < n; ++v)
    if (row[v] == total) {
      best_v = v;
      break;
    }
  reconstruct(reconstruct, mask, best_v);
  return out;
}

SteinerResult exact_steiner_tree(const Graph& g, const VertexSet& terminals,
                                 const OracleCaps& caps) {
  if (terminals.empty()) throw InputError("steiner: no terminals");
  std::vector<VertexSet> groups;
  for (int t : terminals) groups.push_back(VertexSet{t});
  GroupSteinerEngine engine(g, std::move(groups),
                            static_cast<int>(terminals.size()), caps);
  std::uint64_t full = (std::uint64_t{1} << terminals.size()) - 1;
  int size = engine.tree_size(full);
  if (size >= kInfSize) return {};
  return {size, engine.tree(full)};
}

SteinerResult exact_group_steiner_tree(const SteinerQuery& q) {
  GroupSteinerEngine engine(q.graph, q.groups,
                            static_cast<int>(q.groups.size()), q.caps);
  std::uint64_t full = (std::uint64_t{1} << q.groups.size()) - 1;
  int size = engine.tree_size(full);
  if (size >= kInfSize) return {};
  return {size, engine.tree(full)};
}

// ---------------------------------------------------------------------------
// Exhaustive domination oracles
// ---------------------------------------------------------------------------

DominatorResult exact_min_dominator(const DominationQuery& q) {
  const Graph& g = q.graph;
  const int n = g.vertex_count();
  if (q.radius < 1) throw InputError("dominator: radius must be >= 1");
  if (q.budget < 0) throw InputError("dominator: negative budget");
  for (int z : q.targets)
    if (z < 0 || z >= n) throw InputError("dominator: target out of range");
  if (n > q.caps.max_subset_n)
    throw ResourceError("dominator: graph exceeds enumeration cap");
  if (n > 64) throw ResourceError("dominator: graph larger than 64 vertices");
  if (binomial_sum(n, q.budget) > q.caps.max_enumeration)
    throw ResourceError("dominator: enumeration budget exceeded");

  auto cover = coverage_masks(g, q.targets, q.radius);
  const std::uint64_t full =
      q.targets.size() >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << q.targets.size()) - 1;
  std::vector<std::uint64_t> suffix(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] | cover[v];

  DominatorResult result;
  std::vector<int> pick;
  // by increasing size, lexicographic within a size: first hit is the
  // minimum-cardinality, lexicographically smallest dominator
  auto search = [&](auto&& self, int next, int need,
                    std::uint64_t acc) -> bool {
    if (need == 0) {
      if (acc != full) return false;
      if (q.connected && !is_connected(g, VertexSet(pick))) return false;
      result.feasible = true;
      result.size = static_cast<int>(pick.size());
      result.dominator = VertexSet(pick);
      return true;
    }
    if ((acc | suffix[next]) != full) return false;
    for (int v = next; v <= n - need; ++v) {
      pick.push_back(v);
      if (self(self, v + 1, need - 1, acc | cover[v])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int s = 0; s <= std::min(q.budget, n); ++s) {
    pick.clear();
    if (search(search, 0, s, 0)) return result;
  }
  return result;  // infeasible within the budget
}

bool is_domination_core(const Graph& g, const VertexSet& Z, int k, int r,
                        const OracleCaps& caps) {
  const int n = g.vertex_count();
  if (n > 64) throw ResourceError("is_domination_core: graph larger than 64");
  if (n > caps.max_subset_n)
    throw ResourceError("is_domination_core: graph exceeds enumeration cap");
  if (binomial_sum(n, k) > caps.max_enumeration)
    throw ResourceError("is_domination_core: enumeration budget exceeded");
  auto cover_z = coverage_masks(g, Z, r);
  auto cover_all = coverage_masks(g, VertexSet::full(n), r);
  const std::uint64_t full_z =
      Z.size() >= 64 ? ~std::uint64_t{0}
                     : (std::uint64_t{1} << Z.size()) - 1;
  const std::uint64_t full_v =
      n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  // enumerate every D with |D| <= k; any Z-dominator that misses a vertex
  // of G is a counterexample
  auto enumerate = [&](auto&& self, int next, int remaining, std::uint64_t accz,
                       std::uint64_t accv) -> bool {
    if (accz == full_z && accv != full_v) return true;
    if (remaining == 0 || next == n) return false;
    for (int v = next; v < n; ++v)
      if (self(self, v + 1, remaining - 1, accz | cover_z[v],
               accv | cover_all[v]))
        return true;
    return false;
  };
  return !enumerate(enumerate, 0, k, 0, 0);
}

bool exact_set_cover(const SetCoverInstance& sc, const OracleCaps& caps) {
  const int u = sc.universe_size;
  if (u > 64) throw ResourceError("set cover: universe larger than 64");
  const int f = static_cast<int>(sc.families.size());
  if (binomial_sum(f, sc.k) > caps.max_enumeration)
    throw ResourceError("set cover: enumeration budget exceeded");
  const std::uint64_t full =
      u >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << u) - 1;
  std::vector<std::uint64_t> fam(f, 0);
  for (int j = 0; j < f; ++j)
    for (int e : sc.families[j]) {
      if (e < 0 || e >= u) throw InputError("set cover: element out of range");
      fam[j] |= std::uint64_t{1} << e;
    }
  std::vector<std::uint64_t> suffix(f + 1, 0);
  for (int j = f - 1; j >= 0; --j) suffix[j] = suffix[j + 1] | fam[j];

  auto rec = [&](auto&& self, int next, int remaining,
                 std::uint64_t acc) -> bool {
    if (acc == full) return true;
    if (remaining == 0) return false;
    if ((acc | suffix[next]) != full) return false;
    for (int j = next; j < f; ++j)
      if (self(self, j + 1, remaining - 1, acc | fam[j])) return true;
    return false;
  };
  return rec(rec, 0, sc.k, 0);
}

// ---------------------------------------------------------------------------
// Set Cover file format
// ---------------------------------------------------------------------------

SetCoverInstance read_set_cover(std::istream& in) {
  SetCoverInstance sc;
  int f = 0;
  if (!(in >> sc.universe_size >> f >> sc.k))
    throw InputError("set cover file: missing header");
  if (sc.universe_size < 0 || f < 0 || sc.k < 0)
    throw InputError("set cover file: negative header field");
  in.ignore();
  sc.families.resize(f);
  std::string line;
  for (int j = 0; j < f; ++j) {
    if (!std::getline(in, line)) throw InputError("set cover file: truncated");
    std::istringstream ls(line);
    int e;
    while (ls >> e) sc.families[j].push_back(e);
  }
  return sc;
}

void write_set_cover(std::ostream& out, const SetCoverInstance& sc) {
  out << sc.universe_size << ' ' << sc.families.size() << ' ' << sc.k << '\n';
  for (const auto& fam : sc.families) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (i) out << ' ';
      out << fam[i];
    }
    out << '\n';
  }
}

SetCoverInstance read_set_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_set_cover(in);
}

}  // namespace cdskernel
