#pragma once

#include <optional>
#include <vector>

#include "tmatch/detect.hpp"
#include "tmatch/graph.hpp"

namespace tmatch {

struct OracleOptimum {
  Weight weight = 0;  // doubled
  std::vector<EdgeId> edges;
};

// Subset enumeration over vertex sets; no Dense grouping. Needs n <= 14.
std::vector<ForbiddenSubgraph> brute_force_subgraphs(const Graph& g, const Variant& variant);

// Heaviest t-matching containing no forbidden subgraph. Needs m <= 40.
OracleOptimum brute_force_optimum(const Graph& g, const Variant& variant);

struct LbOptimum {
  bool feasible = false;
  Weight min_weight = 0;
  int edges_at_min_weight = 0;  // fewest edges among minimum-weight solutions
  int min_cardinality = 0;
};

// Exhaustive (l,b)-matching optima with the multigraph's own weights. Needs m <= 22.
LbOptimum brute_force_lb(const MultiGraph& g, const Capacity& cap);

}  // namespace tmatch
