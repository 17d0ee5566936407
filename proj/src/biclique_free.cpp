#include "cdskernel/biclique_free.hpp"

#include <algorithm>
#include <cmath>

#include "cdskernel/errors.hpp"

namespace cdskernel {

long long kdd_core_size_bound(int k, int d) {
  long long bound = 2LL * d + 1;
  for (int i = 0; i <= d; ++i) {
    bound *= k;
    if (bound > (1LL << 40)) return bound;
  }
  return bound;
}

CoreReductionTrace reduce_core_once(const Graph& g, const VertexSet& Z, int k,
                                    int d) {
  if (k < 1) throw InputError("reduce_core_once: k must be >= 1");
  if (d < 1) throw InputError("reduce_core_once: d must be >= 1");
  if (Z.size() <= kdd_core_size_bound(k, d))
    throw InputError("reduce_core_once: |Z| below the size bound");

  const int n = g.vertex_count();
  CoreReductionTrace trace;
  VertexSet X = Z;
  VertexSet S;
  bool first = true;
  while (true) {
    const int threshold = (X.size() + k - 1) / k;
    // pivot: most of X inside the closed neighborhood, ties to the smallest
    // id. A dominator of m core vertices covers them with N[v], so the
    // pigeonhole certificate needs the closed count.
    int best = -1, best_count = -1;
    for (int v = 0; v < n; ++v) {
      if (S.contains(v)) continue;
      int count = X.contains(v) ? 1 : 0;
      for (int w : g.neighbors(v))
        if (X.contains(w)) ++count;
      if (count >= threshold && count > best_count) {
        best = v;
        best_count = count;
      }
    }
    if (best < 0) {
      if (first) {
        trace.verdict = CoreVerdict::ds_exceeds_k;
        return trace;
      }
      VertexSet candidates = X.minus(S);
      if (candidates.empty())
        throw InputError("reduce_core_once: no removable vertex; input is "
                         "not a valid instance for the claimed d");
      trace.removed = *candidates.begin();
      trace.verdict = CoreVerdict::core_reduced;
      return trace;
    }
    first = false;
    S.insert(best);
    VertexSet closed{best};
    for (int w : g.neighbors(best)) closed.insert(w);
    X = X.intersect(closed);
    trace.chain.emplace_back(X, best);
  }
}

CoreResult compute_core(const Graph& g, int k, int d) {
  CoreResult result;
  result.core = VertexSet::full(g.vertex_count());
  if (k == 0) {
    result.rejected = g.vertex_count() > 0;
    return result;
  }
  const long long bound = kdd_core_size_bound(k, d);
  while (result.core.size() > bound) {
    auto trace = reduce_core_once(g, result.core, k, d);
    if (trace.verdict == CoreVerdict::ds_exceeds_k) {
      result.rejected = true;
      return result;
    }
    result.core.erase(trace.removed);
    result.removals.push_back(trace.removed);
  }
  return result;
}

CoreProvider kdd_core_provider(int d) {
  return [d](const Graph& g, int k) -> std::optional<VertexSet> {
    auto res = compute_core(g, k, d);
    if (res.rejected) return std::nullopt;
    return res.core;
  };
}

KernelOutput psaks_kdd(const Graph& g, int k, double eps, int d,
                       const OracleCaps& caps) {
  return lossy_cds_kernel(g, k, eps, kdd_core_provider(d), caps);
}

}  // namespace cdskernel
