#pragma once

#include <optional>
#include <vector>

#include "tmatch/graph.hpp"

namespace tmatch {

struct WeightedEdge {
  int u;
  int v;
  Weight w;
};

struct DualBlossom {
  std::vector<int> vertices;
  Weight z2 = 0;  // twice the blossom dual
};

struct MatchingResult {
  std::vector<int> mate_edge;  // per vertex: matched edge index or -1
  Weight weight = 0;
  int size = 0;
  std::vector<Weight> y2;  // twice the vertex duals
  std::vector<DualBlossom> blossoms;
};

// Dual-feasible starting point: y[v] integral with y[u]+y[v] >= w on every edge.
// Edges of `greedy` are matched in order while both ends are free and tight.
struct WarmStart {
  std::vector<Weight> y;
  std::vector<int> greedy;
};

// Maximum weight matching; with max_cardinality, maximum weight among maximum
// cardinality matchings. Edmonds' primal-dual blossom method, integer duals.
MatchingResult max_weight_matching(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality,
                                   const WarmStart* warm = nullptr);

// Perfect matching of maximum weight, or nullopt when none exists.
std::optional<MatchingResult> max_weight_perfect_matching(int n, const std::vector<WeightedEdge>& edges,
                                                          const WarmStart* warm = nullptr);

// Complementary slackness for a perfect matching: dual feasibility on every
// edge, tight matched edges, non-negative and full blossoms.
bool verify_perfect_certificate(int n, const std::vector<WeightedEdge>& edges, const MatchingResult& r);

// Maximum cardinality matching grown from `mate` (per vertex partner or -1).
// Matched vertices stay matched.
std::vector<int> max_cardinality_matching(int n, const std::vector<std::vector<int>>& adj, std::vector<int> mate);

}  // namespace tmatch
