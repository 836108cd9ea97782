#include "tmatch/potentials.hpp"

#include <algorithm>

namespace tmatch {

std::array<Weight, 3> triangle_potential(Weight w_ab, Weight w_ac, Weight w_bc) {
  Weight twice_a = w_ab + w_ac - w_bc;
  Weight twice_b = w_ab + w_bc - w_ac;
  Weight twice_c = w_ac + w_bc - w_ab;
  if (twice_a % 2 != 0) fail(ErrorKind::Argument, "triangle potential needs doubled weights");
  return {twice_a / 2, twice_b / 2, twice_c / 2};
}

namespace {

Weight edge_weight(const Graph& g, Vertex a, Vertex b) {
  EdgeId e = g.find_edge(a, b);
  TMATCH_CHECK(e >= 0, "potential extraction on a missing edge");
  return g.edge(e).w;
}

std::vector<std::vector<Vertex>> classes_of(const ForbiddenSubgraph& h) {
  if (h.kind == Kind::Kt1) {
    std::vector<std::vector<Vertex>> cls;
    for (Vertex v : h.vertices) cls.push_back({v});
    return cls;
  }
  return h.classes;
}

PotentialFunction bipartite_potential(const Graph& g, const ForbiddenSubgraph& h, Weight delta) {
  PotentialFunction pf;
  const auto& c1 = h.classes[0];
  const auto& c2 = h.classes[1];
  Vertex a0 = c1.front();
  Vertex b0 = c2.front();
  Weight w0 = edge_weight(g, a0, b0);
  TMATCH_CHECK(w0 % 2 == 0, "doubled weights must be even");
  pf.r[a0] = w0 / 2;
  for (Vertex b : c2) pf.r[b] = edge_weight(g, a0, b) - pf.r[a0];
  for (Vertex a : c1)
    if (a != a0) pf.r[a] = edge_weight(g, a, b0) - pf.r[b0];
  for (Vertex a : c1) pf.r[a] += delta;
  for (Vertex b : c2) pf.r[b] -= delta;
  return pf;
}

// Each vertex takes its value from a triangle through two other classes.
PotentialFunction triangle_cover(const Graph& g, const std::vector<std::vector<Vertex>>& cls,
                                 const std::vector<Vertex>& order) {
  std::map<Vertex, int> class_of;
  for (int i = 0; i < static_cast<int>(cls.size()); ++i)
    for (Vertex v : cls[i]) class_of[v] = i;
  PotentialFunction pf;
  for (Vertex x : order) {
    if (pf.r.count(x)) continue;
    int cx = class_of.at(x);
    int cy = cx == 0 ? 1 : 0;
    int cz = 0;
    while (cz == cx || cz == cy) ++cz;
    Vertex y = cls[cy].front();
    Vertex z = cls[cz].front();
    auto r = triangle_potential(edge_weight(g, x, y), edge_weight(g, x, z), edge_weight(g, y, z));
    pf.r[x] = r[0];
  }
  return pf;
}

}  // namespace

std::optional<PotentialFunction> extract_potential(const Graph& g, const ForbiddenSubgraph& h,
                                                   const ExtractOptions& opt) {
  PotentialFunction pf;
  if (h.kind == Kind::Ktt) {
    pf = bipartite_potential(g, h, opt.delta);
  } else {
    std::vector<Vertex> order = opt.cover_order.empty() ? h.vertices : opt.cover_order;
    pf = triangle_cover(g, classes_of(h), order);
  }
  if (!verify_vertex_induced(g, h, pf)) return std::nullopt;
  return pf;
}

bool verify_vertex_induced(const Graph& g, const ForbiddenSubgraph& h, const PotentialFunction& pf) {
  for (EdgeId e : subgraph_edges(g, h)) {
    const auto& ed = g.edge(e);
    auto iu = pf.r.find(ed.u);
    auto iv = pf.r.find(ed.v);
    if (iu == pf.r.end() || iv == pf.r.end()) return false;
    if (iu->second + iv->second != ed.w) return false;
  }
  return true;
}

PotentialFunction unit_potential(const ForbiddenSubgraph& h) {
  PotentialFunction pf;
  for (Vertex v : h.vertices) pf.r[v] = 1;
  return pf;
}

}  // namespace tmatch
