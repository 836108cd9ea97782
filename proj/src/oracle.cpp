#include "tmatch/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tmatch {

namespace {

using Classes = std::vector<std::vector<Vertex>>;

// All ways to split `set` into k classes of size q with every cross pair adjacent.
void partitions(const Graph& g, std::vector<Vertex> rest, int q, Classes& cur, std::vector<Classes>& out) {
  if (rest.empty()) {
    out.push_back(cur);
    return;
  }
  Vertex first = rest.front();
  rest.erase(rest.begin());
  std::vector<Vertex> pick{first};
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == q) {
      for (const auto& c : cur)
        for (Vertex a : c)
          for (Vertex b : pick)
            if (!g.adjacent(a, b)) return;
      std::vector<Vertex> left;
      for (Vertex v : rest)
        if (std::find(pick.begin(), pick.end(), v) == pick.end()) left.push_back(v);
      cur.push_back(pick);
      partitions(g, left, q, cur, out);
      cur.pop_back();
      return;
    }
    for (std::size_t i = from; i < rest.size(); ++i) {
      pick.push_back(rest[i]);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
}

void subsets(int n, int k, const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      f(cur);
      return;
    }
    for (int v = from; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

void add_partite(const Graph& g, int p, int q, Kind kind, std::vector<ForbiddenSubgraph>& out) {
  subsets(g.n(), p * q, [&](const std::vector<Vertex>& s) {
    for (Vertex v : s)
      if (g.degree(v) < (p - 1) * q) return;
    Classes cur;
    std::vector<Classes> found;
    partitions(g, s, q, cur, found);
    for (auto& cls : found) {
      ForbiddenSubgraph h;
      h.kind = kind;
      h.p = p;
      h.q = q;
      h.vertices = s;
      if (kind != Kind::Kt1) {
        std::sort(cls.begin(), cls.end());
        h.classes = cls;
      }
      h.id = static_cast<int>(out.size());
      out.push_back(h);
    }
  });
}

}  // namespace

std::vector<ForbiddenSubgraph> brute_force_subgraphs(const Graph& g, const Variant& variant) {
  if (g.n() > 14) fail(ErrorKind::TooLarge, "brute-force enumeration needs n <= 14");
  variant.validate(g.t());
  const int t = g.t();
  std::vector<ForbiddenSubgraph> out;
  bool cliques = variant.kind == VariantKind::Restricted || variant.q == 1;
  bool bicliques = variant.kind == VariantKind::Restricted || variant.p == 2;
  if (cliques) add_partite(g, t + 1, 1, Kind::Kt1, out);
  if (bicliques) add_partite(g, 2, t, Kind::Ktt, out);
  if (!cliques && !bicliques) add_partite(g, variant.p, variant.q, Kind::Kpq, out);
  return out;
}

OracleOptimum brute_force_optimum(const Graph& g, const Variant& variant) {
  if (g.m() > 40) fail(ErrorKind::TooLarge, "brute-force optimum needs m <= 40");
  const auto subs = brute_force_subgraphs(g, variant);
  const int m = g.m();
  const int t = g.t();
  // Heavy edges first tightens the bound early.
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return g.edge(a).w > g.edge(b).w; });
  std::vector<std::vector<int>> subs_of(m);
  std::vector<int> unkept(subs.size(), 0);  // edges of the subgraph not (yet) kept
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (EdgeId e : subgraph_edges(g, subs[i])) {
      subs_of[e].push_back(static_cast<int>(i));
      ++unkept[i];
    }
  std::vector<Weight> suffix(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + g.edge(order[i]).w;

  std::vector<int> deg(g.n(), 0);
  std::vector<char> kept(m, 0);
  OracleOptimum best;
  best.weight = -1;
  Weight cur = 0;
  std::function<void(int)> rec = [&](int i) {
    if (cur + suffix[i] <= best.weight) return;
    if (i == m) {
      best.weight = cur;
      best.edges.clear();
      for (EdgeId e = 0; e < m; ++e)
        if (kept[e]) best.edges.push_back(e);
      return;
    }
    EdgeId e = order[i];
    const auto& ed = g.edge(e);
    bool ok = deg[ed.u] < t && deg[ed.v] < t;
    for (int s : subs_of[e]) ok = ok && unkept[s] > 1;
    if (ok) {
      kept[e] = 1;
      ++deg[ed.u];
      ++deg[ed.v];
      for (int s : subs_of[e]) --unkept[s];
      cur += ed.w;
      rec(i + 1);
      cur -= ed.w;
      for (int s : subs_of[e]) ++unkept[s];
      --deg[ed.u];
      --deg[ed.v];
      kept[e] = 0;
    }
    rec(i + 1);
  };
  rec(0);
  return best;
}

LbOptimum brute_force_lb(const MultiGraph& g, const Capacity& cap) {
  if (g.m() > 22) fail(ErrorKind::TooLarge, "brute-force (l,b)-matching needs m <= 22");
  const int m = g.m();
  LbOptimum best;
  std::vector<int> deg(g.n(), 0);
  // remaining[v]: undecided incident edges after position i
  std::vector<int> remaining(g.n(), 0);
  for (const auto& e : g.edges()) {
    ++remaining[e.u];
    ++remaining[e.v];
  }
  Weight w = 0;
  int size = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      if (!best.feasible || w < best.min_weight || (w == best.min_weight && size < best.edges_at_min_weight)) {
        best.min_weight = w;
        best.edges_at_min_weight = size;
      }
      best.min_cardinality = best.feasible ? std::min(best.min_cardinality, size) : size;
      best.feasible = true;
      return;
    }
    const auto& e = g.edge(i);
    --remaining[e.u];
    --remaining[e.v];
    if (deg[e.u] < cap.b[e.u] && deg[e.v] < cap.b[e.v]) {
      ++deg[e.u];
      ++deg[e.v];
      w += e.w;
      ++size;
      if (deg[e.u] + remaining[e.u] >= cap.l[e.u] && deg[e.v] + remaining[e.v] >= cap.l[e.v]) rec(i + 1);
      --size;
      w -= e.w;
      --deg[e.u];
      --deg[e.v];
    }
    if (deg[e.u] + remaining[e.u] >= cap.l[e.u] && deg[e.v] + remaining[e.v] >= cap.l[e.v]) rec(i + 1);
    ++remaining[e.u];
    ++remaining[e.v];
  };
  for (Vertex v = 0; v < g.n(); ++v)
    if (remaining[v] < cap.l[v] || cap.l[v] > cap.b[v]) return best;
  rec(0);
  return best;
}

}  // namespace tmatch
