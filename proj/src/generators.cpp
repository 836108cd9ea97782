#include "tmatch/generators.hpp"

#include <algorithm>
#include <cmath>

namespace tmatch {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

bool try_edge(Graph& g, Vertex u, Vertex v) {
  if (u == v || g.degree(u) > g.t() || g.degree(v) > g.t() || g.adjacent(u, v)) return false;
  g.add_edge(u, v);
  return true;
}

}  // namespace

void add_random_edges(Graph& g, double edge_prob, std::uint64_t seed) {
  Rng rng(seed);
  const long long n = g.n();
  const long long pairs = n * (n - 1) / 2;
  if (edge_prob <= 0 || pairs == 0) return;
  if (pairs <= (1LL << 20)) {
    std::vector<std::pair<Vertex, Vertex>> all;
    all.reserve(pairs);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    rng.shuffle(all);
    for (const auto& [u, v] : all)
      if (rng.unit() < edge_prob) try_edge(g, u, v);
    return;
  }
  // Large graphs: sample the expected number of pairs directly.
  const long long trials = std::llround(edge_prob * static_cast<double>(pairs));
  for (long long i = 0; i < trials; ++i) {
    Vertex u = static_cast<Vertex>(rng.below(n));
    Vertex v = static_cast<Vertex>(rng.below(n));
    try_edge(g, u, v);
  }
}

Graph random_bounded(int n, int t, double edge_prob, std::uint64_t seed) {
  if (t < 3) fail(ErrorKind::Argument, "t must be at least 3");
  Graph g(n, t);
  add_random_edges(g, edge_prob, seed);
  return g;
}

PlantKind parse_plant_kind(const std::string& s) {
  if (s == "clique") return PlantKind::Clique;
  if (s == "biclique") return PlantKind::Biclique;
  if (s == "partite") return PlantKind::Partite;
  if (s == "clique-pair") return PlantKind::CliquePair;
  if (s == "biclique-pair") return PlantKind::BicliquePair;
  if (s == "clique-biclique") return PlantKind::CliqueBiclique;
  if (s == "partite-pair") return PlantKind::PartitePair;
  if (s == "dense") return PlantKind::DenseCluster;
  fail(ErrorKind::Argument, "unknown plant kind '" + s + "'");
}

std::string plant_kind_name(PlantKind k) {
  switch (k) {
    case PlantKind::Clique: return "clique";
    case PlantKind::Biclique: return "biclique";
    case PlantKind::Partite: return "partite";
    case PlantKind::CliquePair: return "clique-pair";
    case PlantKind::BicliquePair: return "biclique-pair";
    case PlantKind::CliqueBiclique: return "clique-biclique";
    case PlantKind::PartitePair: return "partite-pair";
    case PlantKind::DenseCluster: return "dense";
  }
  return "?";
}

namespace {

// Class sizes of the complete multipartite graph to plant, plus extra
// edges inside classes.
struct Shape {
  std::vector<int> sizes;
  std::vector<int> inner;  // classes whose two vertices get joined
  std::vector<std::pair<int, int>> extra;  // (class, first two vertices) joined, CliqueBiclique
};

Shape shape_of(const PlantSpec& s, int t) {
  Shape sh;
  switch (s.kind) {
    case PlantKind::Clique: sh.sizes.assign(t + 1, 1); break;
    case PlantKind::Biclique: sh.sizes = {t, t}; break;
    case PlantKind::Partite: sh.sizes.assign(s.p, s.q); break;
    case PlantKind::CliquePair:
      sh.sizes.assign(t, 1);
      sh.sizes.push_back(2);
      break;
    case PlantKind::BicliquePair: sh.sizes = {t, t + 1}; break;
    case PlantKind::CliqueBiclique:
      if (t != 3) fail(ErrorKind::Argument, "clique-biclique needs t = 3");
      sh.sizes = {3, 3};
      sh.extra = {{0, 0}, {1, 0}};
      break;
    case PlantKind::PartitePair:
      sh.sizes.assign(s.p, s.q);
      sh.sizes[0] = s.q + 1;
      break;
    case PlantKind::DenseCluster: {
      if (s.q != 2) fail(ErrorKind::Argument, "dense clusters need q = 2");
      int k = s.core_classes == 0 ? s.p : s.core_classes;
      if (k < 2 || k > s.p) fail(ErrorKind::Argument, "dense clusters need 2 <= core classes <= p");
      sh.sizes.assign(s.p, 2);
      for (int i = 0; i < k; ++i) sh.inner.push_back(i);
      break;
    }
  }
  if (s.kind == PlantKind::Partite || s.kind == PlantKind::PartitePair || s.kind == PlantKind::DenseCluster) {
    if ((s.p - 1) * s.q != t) fail(ErrorKind::Argument, "(p-1)*q must equal t");
  }
  return sh;
}

}  // namespace

void plant_forbidden(Graph& g, const PlantSpec& spec, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) free.push_back(v);
  rng.shuffle(free);
  Shape sh = shape_of(spec, g.t());
  int need = 0;
  for (int s : sh.sizes) need += s;
  if (static_cast<long long>(need) * count > static_cast<long long>(free.size()))
    fail(ErrorKind::Argument, "not enough isolated vertices to plant " + std::to_string(count) + " x " +
                                  plant_kind_name(spec.kind));
  std::size_t pos = 0;
  for (int c = 0; c < count; ++c) {
    std::vector<std::vector<Vertex>> cls;
    for (int s : sh.sizes) {
      cls.emplace_back(free.begin() + pos, free.begin() + pos + s);
      pos += s;
    }
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        for (Vertex a : cls[i])
          for (Vertex b : cls[j]) g.add_edge(a, b);
    for (int i : sh.inner) g.add_edge(cls[i][0], cls[i][1]);
    for (const auto& [i, k] : sh.extra) g.add_edge(cls[i][k], cls[i][k + 1]);
  }
}

void vertex_induced_weights(Graph& g, const std::vector<ForbiddenSubgraph>& forbidden, const WeightSpec& spec,
                            std::uint64_t seed) {
  if (spec.unweighted) {
    for (EdgeId e = 0; e < g.m(); ++e) g.set_weight(e, 1);
    return;
  }
  Rng rng(seed);
  std::vector<char> constrained(g.m(), 0);
  for (const auto& h : forbidden) {
    for (Vertex v : h.vertices)
      for (const auto& [x, e] : g.adj(v))
        if (std::binary_search(h.vertices.begin(), h.vertices.end(), x)) constrained[e] = 1;
  }
  const Weight parity = spec.half_potentials ? 1 : 0;
  std::vector<Weight> s(g.n(), 0);  // doubled potentials
  for (Vertex v = 0; v < g.n(); ++v) s[v] = 2 * rng.range(spec.potential_lo, spec.potential_hi) + parity;
  for (int round = 0;; ++round) {
    bool ok = true;
    for (EdgeId e = 0; e < g.m(); ++e) {
      const auto& ed = g.edge(e);
      if (!constrained[e] || s[ed.u] + s[ed.v] >= 0) continue;
      ok = false;
      Weight lo = std::max<Weight>(0, spec.potential_lo);
      if (lo > spec.potential_hi) fail(ErrorKind::Argument, "no non-negative potential range");
      s[ed.u] = 2 * rng.range(lo, spec.potential_hi) + parity;
      s[ed.v] = 2 * rng.range(lo, spec.potential_hi) + parity;
    }
    if (ok) break;
    if (round > 100) fail(ErrorKind::Argument, "could not find non-negative vertex-induced weights");
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& ed = g.edge(e);
    Weight w = constrained[e] ? (s[ed.u] + s[ed.v]) / 2 : rng.range(0, spec.noise_hi);
    g.set_weight(e, w);
  }
}

}  // namespace tmatch
