#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "tmatch/detect.hpp"
#include "tmatch/graph.hpp"
#include "tmatch/potentials.hpp"

namespace tmatch {

struct Gadget {
  int id = -1;
  int subgraph = -1;
  Kind kind = Kind::Kt1;
  // Kt1: {u_H}; Ktt: {u^1, u^2}; Kpq: {u^1..u^p}; Dense: {u^1..u^{p-k}}
  std::vector<Vertex> sub;
  std::vector<std::vector<Vertex>> joined;  // original vertices reached from sub[i] by half-edges
  Vertex uc = -1;      // Dense
  Vertex z = -1;       // Kpq, Dense
  Vertex center = -1;  // Dense
  std::vector<Vertex> core;
  int p = 0;
};

struct AuxiliaryInstance {
  MultiGraph graph;  // edges 0..m-1 are the original edges, same ids
  Capacity cap;
  std::vector<Gadget> gadgets;
  std::vector<int> skipped_dense;  // Dense subgraph ids with negative center potential
  int original_n = 0;
  int original_m = 0;
  int t = 0;
};

AuxiliaryInstance build_auxiliary(const Graph& g, const Detection& det,
                                  const std::map<int, PotentialFunction>& potentials);

struct GadgetStats {
  int added_vertices = 0;
  int added_edges = 0;
  long long sum_b = 0;
};
GadgetStats gadget_stats(const AuxiliaryInstance& aux);

// One line per edge: `u v w kind gadget_id`, w in input units.
void dump_auxiliary(const AuxiliaryInstance& aux, std::ostream& os);

std::string format_doubled(Weight w);

}  // namespace tmatch
