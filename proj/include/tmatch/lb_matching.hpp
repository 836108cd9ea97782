#pragma once

#include <vector>

#include "tmatch/gadgets.hpp"
#include "tmatch/graph.hpp"

namespace tmatch {

struct LbMatching {
  std::vector<EdgeId> edges;  // sorted multigraph edge ids
  std::vector<int> degree;
  Weight weight = 0;  // doubled w'
  int size() const { return static_cast<int>(edges.size()); }
};

struct LbStats {
  int expanded_vertices = 0;
  int expanded_edges = 0;
  int free_after_warm_start = 0;
  bool certificate_ok = false;
  long long aux_size = 0;  // |M*| of the cardinality construction
  long long sum_b = 0;
};

bool is_lb_matching(const MultiGraph& g, const Capacity& cap, const std::vector<EdgeId>& edges);
LbMatching make_lb_matching(const MultiGraph& g, std::vector<EdgeId> edges);

// Minimum w'-weight (l,b)-matching; ties broken towards fewer edges.
LbMatching solve_min_weight_lb(const MultiGraph& g, const Capacity& cap, LbStats* stats = nullptr);
LbMatching solve_min_weight_lb(const AuxiliaryInstance& aux, LbStats* stats = nullptr);

// Minimum cardinality (l,b)-matching through the auxiliary-vertex construction.
LbMatching solve_min_cardinality_lb(const MultiGraph& g, const Capacity& cap, LbStats* stats = nullptr);

// Greedy small feasible matching of the auxiliary instance.
LbMatching small_feasible_matching(const AuxiliaryInstance& aux);

// Caps b at the degrees of the small matching, then solves minimum cardinality.
LbMatching solve_min_cardinality_capped(const AuxiliaryInstance& aux, LbStats* stats = nullptr);
// Same from any feasible starting matching.
LbMatching solve_min_cardinality_capped(const MultiGraph& g, const Capacity& cap, const LbMatching& start,
                                        LbStats* stats = nullptr);

// |M'| - w'(M') for unit weights; checked against the per-gadget formula.
long long count_weight_identity(const AuxiliaryInstance& aux, const LbMatching& m);
long long gadget_count_formula(const AuxiliaryInstance& aux);

}  // namespace tmatch
