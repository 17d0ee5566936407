#pragma once

#include <vector>

#include "cdskernel/framework.hpp"
#include "cdskernel/graph.hpp"
#include "cdskernel/vertex_set.hpp"

namespace cdskernel {

enum class CoreVerdict { core_reduced, ds_exceeds_k };

// One run of the core-shrinking step: the nested sets X_i with their pivot
// vertices v_i, and either a removable vertex or a budget certificate.
struct CoreReductionTrace {
  std::vector<std::pair<VertexSet, int>> chain;  // (X_i, v_i)
  int removed = -1;
  CoreVerdict verdict = CoreVerdict::ds_exceeds_k;
};

// |Z| must exceed this bound before reduce_core_once may run.
long long kdd_core_size_bound(int k, int d);

// Given a k-domination core Z with |Z| > (2d+1) k^{d+1} on a K_{d,d}-free
// graph, either certifies ds(G) > k or finds z with Z \ {z} still a core.
CoreReductionTrace reduce_core_once(const Graph& g, const VertexSet& Z, int k,
                                    int d);

struct CoreResult {
  bool rejected = false;  // ds(G) > k, hence cds(G) > k
  VertexSet core;
  std::vector<int> removals;  // removal order, for replay in tests
};

// Shrinks Z = V(G) vertex by vertex until |Z| <= (2d+1) k^{d+1}.
CoreResult compute_core(const Graph& g, int k, int d);

// Core provider backed by compute_core, for the framework driver.
CoreProvider kdd_core_provider(int d);

// The K_{d,d}-free PSAKS: compute_core followed by the general kernel.
KernelOutput psaks_kdd(const Graph& g, int k, double eps, int d,
                       const OracleCaps& caps = {});

}  // namespace cdskernel
