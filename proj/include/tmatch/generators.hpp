#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmatch/detect.hpp"
#include "tmatch/graph.hpp"

namespace tmatch {

// SplitMix64; the same seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  std::int64_t range(std::int64_t lo, std::int64_t hi);  // inclusive
  double unit();  // [0, 1)
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

// Pairs visited in random order; an edge is kept with probability edge_prob
// when both ends are below degree t+1.
Graph random_bounded(int n, int t, double edge_prob, std::uint64_t seed);

// Same on an existing graph; existing edges stay.
void add_random_edges(Graph& g, double edge_prob, std::uint64_t seed);

enum class PlantKind {
  Clique,          // K_{t+1}
  Biclique,        // K_{t,t}
  Partite,         // K^p_q
  CliquePair,      // two K_{t+1} sharing a K_t
  BicliquePair,    // K_{t,t+1}: K_{t,t}'s sharing K_{t,t-1}
  CliqueBiclique,  // t = 3: K_4 and K_{3,3} sharing a K_{2,2}
  PartitePair,     // K^p_q's sharing I_{q-1} x K^{p-1}_q
  DenseCluster,    // q = 2: K^p_2 with edges inside `core_classes` classes
};

PlantKind parse_plant_kind(const std::string& s);
std::string plant_kind_name(PlantKind k);

struct PlantSpec {
  PlantKind kind = PlantKind::Clique;
  int p = 0;  // Partite / PartitePair / DenseCluster
  int q = 0;
  int core_classes = 0;  // DenseCluster; 0 means all p classes
};

// Plants `count` copies on isolated vertices of g. Throws Argument when there
// are not enough isolated vertices.
void plant_forbidden(Graph& g, const PlantSpec& spec, int count, std::uint64_t seed);

struct WeightSpec {
  bool unweighted = false;
  Weight potential_lo = 0;  // input units, may be negative
  Weight potential_hi = 5;
  bool half_potentials = false;  // potentials in x + 1/2
  Weight noise_hi = 10;          // other edges: uniform in [0, noise_hi]
};

// Per-vertex potentials on the vertex sets of `forbidden` (all edges inside a
// set get r(u) + r(v)); everything else gets noise. Sets the graph's weights.
// Throws Argument if no non-negative assignment is found.
void vertex_induced_weights(Graph& g, const std::vector<ForbiddenSubgraph>& forbidden, const WeightSpec& spec,
                            std::uint64_t seed);

}  // namespace tmatch
