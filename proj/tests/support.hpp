#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tmatch/detect.hpp"
#include "tmatch/generators.hpp"
#include "tmatch/graph.hpp"
#include "tmatch/oracle.hpp"

namespace tmtest {

using namespace tmatch;

struct Config {
  std::string name;
  int t;
  Variant variant;
  std::vector<PlantSpec> plants;
  double prob_lo;
  double prob_hi;
};

inline std::vector<Config> small_configs() {
  auto ps = [](PlantKind k, int p = 0, int q = 0, int core = 0) { return PlantSpec{k, p, q, core}; };
  return {
      {"t3-restricted", 3, Variant::restricted(),
       {ps(PlantKind::Clique), ps(PlantKind::Biclique), ps(PlantKind::CliquePair), ps(PlantKind::CliqueBiclique),
        ps(PlantKind::BicliquePair)},
       0.15, 0.6},
      {"t4-p5-q1", 4, Variant::kpq(5, 1), {ps(PlantKind::Clique), ps(PlantKind::CliquePair)}, 0.2, 0.7},
      {"t3-p2-q3", 3, Variant::kpq(2, 3), {ps(PlantKind::Biclique), ps(PlantKind::BicliquePair)}, 0.15, 0.6},
      {"t4-p3-q2", 4, Variant::kpq(3, 2),
       {ps(PlantKind::Partite, 3, 2), ps(PlantKind::DenseCluster, 3, 2, 3), ps(PlantKind::DenseCluster, 3, 2, 2),
        ps(PlantKind::PartitePair, 3, 2)},
       0.2, 0.7},
      {"t6-p3-q3", 6, Variant::kpq(3, 3), {ps(PlantKind::Partite, 3, 3)}, 0.3, 0.9},
  };
}

inline int plant_size(const PlantSpec& s, int t) {
  switch (s.kind) {
    case PlantKind::Clique: return t + 1;
    case PlantKind::Biclique: return 2 * t;
    case PlantKind::Partite: return s.p * s.q;
    case PlantKind::CliquePair: return t + 2;
    case PlantKind::BicliquePair: return 2 * t + 1;
    case PlantKind::CliqueBiclique: return 6;
    case PlantKind::PartitePair: return s.p * s.q + 1;
    case PlantKind::DenseCluster: return 2 * s.p;
  }
  return 0;
}

// Random instance with at most max_n vertices, usually holding one planted structure.
inline Graph small_instance(const Config& c, std::uint64_t seed, int max_n, bool weighted) {
  Rng rng(seed);
  std::vector<PlantSpec> fit;
  for (const auto& p : c.plants)
    if (plant_size(p, c.t) <= max_n) fit.push_back(p);
  int pick = static_cast<int>(rng.below(fit.size() + 1));
  int need = pick < static_cast<int>(fit.size()) ? plant_size(fit[pick], c.t) : 0;
  int lo = std::max(need, std::min(max_n, c.t + 2));
  int n = static_cast<int>(rng.range(lo, max_n));
  Graph g(n, c.t);
  if (pick < static_cast<int>(fit.size())) plant_forbidden(g, fit[pick], 1, rng.next());
  double prob = c.prob_lo + (c.prob_hi - c.prob_lo) * rng.unit();
  add_random_edges(g, prob, rng.next());
  WeightSpec ws;
  ws.unweighted = !weighted;
  ws.potential_lo = rng.below(3) == 0 ? -3 : 0;
  ws.potential_hi = 6;
  ws.half_potentials = rng.below(2) == 0;
  ws.noise_hi = 12;
  vertex_induced_weights(g, brute_force_subgraphs(g, c.variant), ws, rng.next());
  return g;
}

inline std::set<std::string> keys(const std::vector<ForbiddenSubgraph>& list) {
  std::set<std::string> out;
  for (const auto& h : list)
    if (h.kind != Kind::Dense) out.insert(h.key());
  return out;
}

// Problematic targets (non-absorbed, including dense) are pairwise disjoint.
inline bool problematic_disjoint(const Detection& det) {
  std::vector<int> owner;
  for (const auto& h : det.subgraphs) {
    if (!h.problematic || h.absorbed()) continue;
    for (Vertex v : h.vertices) {
      if (static_cast<int>(owner.size()) <= v) owner.resize(v + 1, -1);
      if (owner[v] >= 0) return false;
      owner[v] = h.id;
    }
  }
  return true;
}

inline Graph graph_from(int n, int t, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n, t);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline std::vector<std::pair<int, int>> complete(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

inline std::vector<std::pair<int, int>> complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) out.push_back({u, a + v});
  return out;
}

inline std::vector<std::pair<int, int>> octahedron() {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : complete(6))
    if (!(u % 2 == 0 && v == u + 1)) out.push_back({u, v});
  return out;
}

struct RandomLb {
  MultiGraph g;
  Capacity cap;
};

// Multigraph with parallel edges, weights in [-20, 20], random capacities.
inline RandomLb random_lb(std::uint64_t seed, int max_n = 10, int max_m = 14) {
  Rng rng(seed);
  int n = static_cast<int>(rng.range(2, max_n));
  int m = static_cast<int>(rng.range(0, max_m));
  RandomLb r{MultiGraph(n), {}};
  for (int i = 0; i < m; ++i) {
    Vertex u = static_cast<Vertex>(rng.below(n));
    Vertex v = static_cast<Vertex>(rng.below(n - 1));
    if (v >= u) ++v;
    r.g.add_edge(u, v, rng.range(-20, 20));
  }
  for (Vertex v = 0; v < n; ++v) {
    int d = r.g.degree(v);
    int b = static_cast<int>(rng.range(0, d));
    int l = static_cast<int>(rng.range(0, std::min(b, 2)));
    if (rng.below(4) == 0) b = d;
    r.cap.l.push_back(l);
    r.cap.b.push_back(b);
  }
  return r;
}

}  // namespace tmtest
