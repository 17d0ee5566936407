#pragma once

#include <string>
#include <vector>

#include "cdskernel/graph.hpp"
#include "cdskernel/set_cover.hpp"

namespace cdskernel {

// Output of the Set Cover -> Distance-r Dominating Set reduction. The graph
// is an exact r-subdivision of the gadget base; the role map records where
// the base vertices ended up.
struct RdsReduction {
  Graph graph;
  int r = 1;
  int k_prime = 0;
  std::vector<int> element_vertices;
  std::vector<int> set_vertices;
  int guard = -1;
  int pendant = -1;
  // an element occurs in no family: the instance is vacuously negative and
  // a canonical negative gadget is emitted instead
  bool uncoverable_element = false;
};

// Gadget: incidence graph of (U, F) plus a guard adjacent to every set
// vertex and a pendant hanging on the guard, exactly r-subdivided;
// k' = k + 1. Equivalence is validated by the acceptance sweep, not
// trusted from the construction.
RdsReduction reduce_to_rds(const SetCoverInstance& sc, int r);

// Budget for the connected variant: cds_r <= (2r+1) k' whenever the plain
// variant is positive (informational, not an equivalence).
long long connected_rds_budget(const RdsReduction& red);

// True iff g is an exact p-subdivision of SOME simple graph. Degree-2
// vertices may act as subdivision points or as base vertices; the check
// accepts when any consistent assignment exists.
bool membership_check_Hp(const Graph& g, int p);

// JSON role map {element_vertices, set_vertices, guard, pendant, k_prime}.
std::string rds_role_map_json(const RdsReduction& red);

}  // namespace cdskernel
