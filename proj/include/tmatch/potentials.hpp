#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "tmatch/detect.hpp"
#include "tmatch/graph.hpp"

namespace tmatch {

// Doubled potentials: r(u) + r(v) == w(u, v) on every edge of the subgraph.
struct PotentialFunction {
  std::map<Vertex, Weight> r;
  Weight at(Vertex v) const { return r.at(v); }
};

std::array<Weight, 3> triangle_potential(Weight w_ab, Weight w_ac, Weight w_bc);

struct ExtractOptions {
  Weight delta = 0;                 // K_{t,t}: +delta on class 1, -delta on class 2
  std::vector<Vertex> cover_order;  // optional vertex order for the triangle cover
};

std::optional<PotentialFunction> extract_potential(const Graph& g, const ForbiddenSubgraph& h,
                                                   const ExtractOptions& opt = {});
bool verify_vertex_induced(const Graph& g, const ForbiddenSubgraph& h, const PotentialFunction& pf);

// Potential 1/2 (doubled: 1) on every vertex of h.
PotentialFunction unit_potential(const ForbiddenSubgraph& h);

}  // namespace tmatch
