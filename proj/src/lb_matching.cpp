#include "tmatch/lb_matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "tmatch/blossom.hpp"

namespace tmatch {

bool is_lb_matching(const MultiGraph& g, const Capacity& cap, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(g.n(), 0);
  std::vector<char> seen(g.m(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.m() || seen[e]) return false;
    seen[e] = 1;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (deg[v] < cap.l[v] || deg[v] > cap.b[v]) return false;
  return true;
}

LbMatching make_lb_matching(const MultiGraph& g, std::vector<EdgeId> edges) {
  LbMatching m;
  std::sort(edges.begin(), edges.end());
  m.edges = std::move(edges);
  m.degree.assign(g.n(), 0);
  for (EdgeId e : m.edges) {
    ++m.degree[g.edge(e).u];
    ++m.degree[g.edge(e).v];
    m.weight += g.edge(e).w;
  }
  return m;
}

namespace {

// Two copies of G joined by b-l paths of length three per vertex, then every
// vertex of capacity >= 2 split into external and internal vertices.
// Capacity-1 vertices stay whole (their split is equivalent to the vertex).
struct Expanded {
  int n = 0;
  std::vector<WeightedEdge> edges;
  std::vector<int> source;  // multigraph edge id for first-copy edges, else -1
  WarmStart warm;
};

Expanded expand(const MultiGraph& g, const Capacity& cap, const std::vector<Weight>& w) {
  Weight big = 1;
  for (Weight x : w) big = std::max<Weight>(big, std::llabs(x));
  const int n = g.n();
  Expanded ex;
  std::vector<Weight>& y = ex.warm.y;
  auto node = [&](Weight yy) {
    y.push_back(yy);
    return ex.n++;
  };
  struct Star {
    int first_ext = -1;
    int ext = 0;
    int first_int = -1;
    int internal = 0;
    int next = 0;
  };
  std::vector<Star> star(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    const int b = cap.b[v];
    const int d = g.degree(v) + b - cap.l[v];
    for (int c = 0; c < 2; ++c) {
      Star& s = star[2 * v + c];
      if (b == 0 || d == 0) continue;
      if (b == 1) {
        s.first_ext = node(0);
        s.ext = 1;
        continue;
      }
      s.ext = d;
      s.first_ext = ex.n;
      for (int i = 0; i < d; ++i) node(0);
      s.internal = d - b;
      s.first_int = ex.n;
      for (int i = 0; i < d - b; ++i) node(2 * big);
    }
  }
  auto slot = [&](int x) {
    Star& s = star[x];
    if (s.first_ext < 0) return -1;
    if (s.ext == 1 && s.internal == 0) return s.first_ext;
    return s.first_ext + s.next++;
  };

  std::vector<int> outer, extint, middle, copies;
  auto add = [&](int a, int b, Weight wt, int src, std::vector<int>& bucket) {
    bucket.push_back(static_cast<int>(ex.edges.size()));
    ex.edges.push_back({a, b, wt});
    ex.source.push_back(src);
  };
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& me = g.edge(e);
    for (int c = 0; c < 2; ++c) {
      int a = slot(2 * me.u + c);
      int b = slot(2 * me.v + c);
      if (a < 0 || b < 0) continue;
      add(a, b, w[e], c == 0 ? e : -1, copies);
      Weight half = w[e] > 0 ? (w[e] + 1) / 2 : 0;
      y[a] = std::max(y[a], half);
      y[b] = std::max(y[b], half);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < cap.b[v] - cap.l[v]; ++i) {
      int s0 = slot(2 * v);
      int s1 = slot(2 * v + 1);
      int c1 = node(big);
      int c2 = node(big);
      add(s0, c1, big, -1, outer);
      add(c2, s1, big, -1, outer);
      add(c1, c2, 2 * big, -1, middle);
    }
  }
  for (const Star& s : star)
    for (int i = 0; i < s.ext && s.internal > 0; ++i)
      for (int j = 0; j < s.internal; ++j) add(s.first_ext + i, s.first_int + j, 2 * big, -1, extint);
  for (const auto* bucket : {&outer, &extint, &middle, &copies})
    ex.warm.greedy.insert(ex.warm.greedy.end(), bucket->begin(), bucket->end());
  return ex;
}

void check_overflow(const MultiGraph& g) {
  Weight wmax = 0;
  for (const auto& e : g.edges()) wmax = std::max<Weight>(wmax, std::llabs(e.w));
  const long double m = g.m();
  const long double bound = 2.0L * static_cast<long double>(wmax) * (m + 1) * std::max<long double>(m, 1);
  if (bound * 64 > static_cast<long double>(std::numeric_limits<Weight>::max()))
    fail(ErrorKind::Bound, "edge weights too large for exact integer arithmetic");
}

LbMatching min_cardinality_from(const MultiGraph& g, const Capacity& cap, const std::vector<EdgeId>& start, LbStats* stats) {
  const int n = g.n();
  // G*: v keeps [b,b]; v' = n+v takes [0, b-l] and b-l parallel edges to v.
  struct StarEdge {
    int x, y;
    int src;
  };
  std::vector<StarEdge> es;
  std::vector<int> bstar(2 * n, 0);
  for (Vertex v = 0; v < n; ++v) {
    bstar[v] = cap.b[v];
    bstar[n + v] = cap.b[v] - cap.l[v];
  }
  for (EdgeId e = 0; e < g.m(); ++e) es.push_back({g.edge(e).u, g.edge(e).v, e});
  std::vector<std::vector<int>> slack_edges(n);
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < cap.b[v] - cap.l[v]; ++i) {
      slack_edges[v].push_back(static_cast<int>(es.size()));
      es.push_back({v, n + v, -1});
    }
  std::vector<int> chosen(es.size(), 0);
  std::vector<int> deg(n, 0);
  for (EdgeId e : start) {
    chosen[e] = 1;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (Vertex v = 0; v < n; ++v) {
    int need = cap.b[v] - deg[v];
    TMATCH_CHECK(need >= 0 && need <= static_cast<int>(slack_edges[v].size()), "start matching violates capacities");
    for (int i = 0; i < need; ++i) chosen[slack_edges[v][i]] = 1;
  }

  // b-matching -> matching: b* copies per vertex, two nodes per edge.
  std::vector<int> first_copy(2 * n);
  int nodes = 0;
  for (int x = 0; x < 2 * n; ++x) {
    first_copy[x] = nodes;
    nodes += bstar[x];
  }
  const int first_edge_node = nodes;
  nodes += 2 * static_cast<int>(es.size());
  std::vector<std::vector<int>> adj(nodes);
  std::vector<int> mate(nodes, -1);
  std::vector<int> used(2 * n, 0);
  for (int k = 0; k < static_cast<int>(es.size()); ++k) {
    int ex = first_edge_node + 2 * k, ey = ex + 1;
    adj[ex].push_back(ey);
    adj[ey].push_back(ex);
    for (int i = 0; i < bstar[es[k].x]; ++i) {
      adj[ex].push_back(first_copy[es[k].x] + i);
      adj[first_copy[es[k].x] + i].push_back(ex);
    }
    for (int i = 0; i < bstar[es[k].y]; ++i) {
      adj[ey].push_back(first_copy[es[k].y] + i);
      adj[first_copy[es[k].y] + i].push_back(ey);
    }
    if (chosen[k]) {
      int cx = first_copy[es[k].x] + used[es[k].x]++;
      int cy = first_copy[es[k].y] + used[es[k].y]++;
      mate[ex] = cx;
      mate[cx] = ex;
      mate[ey] = cy;
      mate[cy] = ey;
    } else {
      mate[ex] = ey;
      mate[ey] = ex;
    }
  }
  mate = max_cardinality_matching(nodes, adj, std::move(mate));
  std::vector<EdgeId> result;
  long long star_size = 0;
  for (int k = 0; k < static_cast<int>(es.size()); ++k) {
    int ex = first_edge_node + 2 * k;
    if (mate[ex] == ex + 1) continue;
    ++star_size;
    if (es[k].src >= 0) result.push_back(es[k].src);
  }
  long long sum_b = 0;
  for (Vertex v = 0; v < n; ++v) sum_b += cap.b[v];
  TMATCH_CHECK(star_size == sum_b - static_cast<long long>(result.size()),
               "auxiliary matching size differs from sum b - |M|");
  if (stats) {
    stats->aux_size = star_size;
    stats->sum_b = sum_b;
    stats->expanded_vertices = nodes;
  }
  TMATCH_CHECK(is_lb_matching(g, cap, result), "cardinality solve returned an infeasible matching");
  return make_lb_matching(g, std::move(result));
}

}  // namespace

LbMatching solve_min_weight_lb(const MultiGraph& g, const Capacity& cap_in, LbStats* stats) {
  Capacity cap = normalize(g, cap_in);
  check_overflow(g);
  const Weight scale = g.m() + 1;
  std::vector<Weight> w(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) w[e] = -(g.edge(e).w * scale + 1);
  Expanded ex = expand(g, cap, w);
  auto r = max_weight_perfect_matching(ex.n, ex.edges, &ex.warm);
  if (!r) fail(ErrorKind::Infeasible, "no (l,b)-matching exists");
  bool ok = verify_perfect_certificate(ex.n, ex.edges, *r);
  TMATCH_CHECK(ok, "dual certificate failed");
  std::vector<EdgeId> chosen;
  for (int v = 0; v < ex.n; ++v) {
    int k = r->mate_edge[v];
    if (ex.source[k] >= 0 && v == ex.edges[k].u) chosen.push_back(ex.source[k]);
  }
  TMATCH_CHECK(is_lb_matching(g, cap, chosen), "weighted solve returned an infeasible matching");
  if (stats) {
    stats->expanded_vertices = ex.n;
    stats->expanded_edges = static_cast<int>(ex.edges.size());
    stats->certificate_ok = ok;
  }
  return make_lb_matching(g, std::move(chosen));
}

LbMatching solve_min_weight_lb(const AuxiliaryInstance& aux, LbStats* stats) {
  return solve_min_weight_lb(aux.graph, aux.cap, stats);
}

LbMatching solve_min_cardinality_lb(const MultiGraph& g, const Capacity& cap_in, LbStats* stats) {
  Capacity cap = normalize(g, cap_in);
  Expanded ex = expand(g, cap, std::vector<Weight>(g.m(), 0));
  std::vector<std::vector<int>> adj(ex.n);
  for (const auto& e : ex.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> mate(ex.n, -1);
  for (int k : ex.warm.greedy) {
    const auto& e = ex.edges[k];
    if (mate[e.u] == -1 && mate[e.v] == -1) {
      mate[e.u] = e.v;
      mate[e.v] = e.u;
    }
  }
  mate = max_cardinality_matching(ex.n, adj, std::move(mate));
  std::vector<EdgeId> start;
  std::vector<char> taken(ex.n, 0);
  for (int k = 0; k < static_cast<int>(ex.edges.size()); ++k) {
    const auto& e = ex.edges[k];
    if (mate[e.u] != e.v || taken[e.u]) continue;
    taken[e.u] = taken[e.v] = 1;
    if (ex.source[k] >= 0) start.push_back(ex.source[k]);
  }
  for (int v = 0; v < ex.n; ++v)
    if (mate[v] == -1) fail(ErrorKind::Infeasible, "no (l,b)-matching exists");
  TMATCH_CHECK(is_lb_matching(g, cap, start), "feasibility phase produced an infeasible matching");
  return min_cardinality_from(g, cap, start, stats);
}

LbMatching small_feasible_matching(const AuxiliaryInstance& aux) {
  const auto& g = aux.graph;
  const auto& cap = aux.cap;
  std::vector<int> deg(g.n(), 0);
  std::vector<EdgeId> chosen;
  std::vector<char> taken(g.m(), 0);
  auto take = [&](EdgeId e) {
    taken[e] = 1;
    chosen.push_back(e);
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  };
  auto spare = [&](Vertex v) { return deg[v] < cap.b[v]; };
  auto half_edges = [&](Vertex sub, int count) {
    for (EdgeId e : g.adj(sub)) {
      if (count == 0) break;
      const auto& me = g.edge(e);
      if (me.kind != EdgeKind::HalfEdge || taken[e]) continue;
      if (!spare(me.ref)) continue;
      take(e);
      --count;
    }
    TMATCH_CHECK(count == 0, "no free half-edge for a gadget vertex");
  };
  auto to_z = [&](Vertex sub, Vertex z, int count) {
    for (EdgeId e : g.adj(sub)) {
      if (count == 0) break;
      if (g.other(e, sub) == z && !taken[e]) {
        take(e);
        --count;
      }
    }
    TMATCH_CHECK(count == 0, "missing gadget edge to the global vertex");
  };
  for (const auto& gd : aux.gadgets) {
    switch (gd.kind) {
      case Kind::Kt1: half_edges(gd.sub[0], 2); break;
      case Kind::Ktt:
        for (Vertex u : gd.sub) half_edges(u, 1);
        break;
      case Kind::Kpq:
        for (std::size_t i = 0; i < gd.sub.size(); ++i) {
          if (static_cast<int>(i) < gd.p - 2) to_z(gd.sub[i], gd.z, 1);
          else half_edges(gd.sub[i], 1);
        }
        break;
      case Kind::Dense:
        for (Vertex u : gd.sub) to_z(u, gd.z, 1);
        half_edges(gd.uc, 2);
        break;
    }
  }
  for (Vertex v = 0; v < aux.original_n; ++v) {
    if (deg[v] >= cap.l[v]) continue;
    EdgeId best = -1;
    for (EdgeId e : g.adj(v)) {
      const auto& me = g.edge(e);
      if (me.kind != EdgeKind::Original || taken[e]) continue;
      Vertex x = g.other(e, v);
      if (!spare(x)) continue;
      if (deg[x] < cap.l[x]) {
        best = e;
        break;
      }
      if (best < 0) best = e;
    }
    TMATCH_CHECK(best >= 0, "no edge to cover vertex " + std::to_string(v));
    take(best);
  }
  TMATCH_CHECK(is_lb_matching(g, normalize(g, cap), chosen), "greedy matching is infeasible");
  return make_lb_matching(g, std::move(chosen));
}

LbMatching solve_min_cardinality_capped(const AuxiliaryInstance& aux, LbStats* stats) {
  return solve_min_cardinality_capped(aux.graph, aux.cap, small_feasible_matching(aux), stats);
}

LbMatching solve_min_cardinality_capped(const MultiGraph& g, const Capacity& cap_in, const LbMatching& start,
                                        LbStats* stats) {
  TMATCH_CHECK(is_lb_matching(g, normalize(g, cap_in), start.edges), "capped solve needs a feasible start");
  // keep only vertices the small matching touches
  std::vector<int> id(g.n(), -1);
  std::vector<Vertex> back;
  for (Vertex v = 0; v < g.n(); ++v)
    if (start.degree[v] > 0) {
      id[v] = static_cast<int>(back.size());
      back.push_back(v);
    }
  MultiGraph sub(static_cast<int>(back.size()));
  std::vector<EdgeId> edge_back;
  std::vector<EdgeId> edge_id(g.m(), -1);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& me = g.edge(e);
    if (id[me.u] < 0 || id[me.v] < 0) continue;
    MultiEdge ne = me;
    ne.u = id[me.u];
    ne.v = id[me.v];
    edge_id[e] = sub.add_edge(ne);
    edge_back.push_back(e);
  }
  Capacity cap;
  for (Vertex v : back) {
    cap.l.push_back(cap_in.l[v]);
    cap.b.push_back(start.degree[v]);
  }
  std::vector<EdgeId> sub_start;
  for (EdgeId e : start.edges) sub_start.push_back(edge_id[e]);
  cap = normalize(sub, cap);
  LbMatching m = min_cardinality_from(sub, cap, sub_start, stats);
  std::vector<EdgeId> chosen;
  for (EdgeId e : m.edges) chosen.push_back(edge_back[e]);
  TMATCH_CHECK(is_lb_matching(g, normalize(g, cap_in), chosen), "capped solve is infeasible for the full instance");
  return make_lb_matching(g, std::move(chosen));
}

long long gadget_count_formula(const AuxiliaryInstance& aux) {
  long long s = 0;
  for (const auto& gd : aux.gadgets) {
    switch (gd.kind) {
      case Kind::Kt1:
      case Kind::Ktt: s += 1; break;
      case Kind::Kpq: s += gd.p - 1; break;
      case Kind::Dense: s += gd.p - static_cast<long long>(gd.core.size()) / 2 + 1; break;
    }
  }
  return s;
}

long long count_weight_identity(const AuxiliaryInstance& aux, const LbMatching& m) {
  long long twice = 0;
  for (EdgeId e : m.edges) twice += 2 - aux.graph.edge(e).w;
  TMATCH_CHECK(twice % 2 == 0, "half-edge count must be even");
  long long value = twice / 2;
  TMATCH_CHECK(value == gadget_count_formula(aux), "|M'| - w'(M') = " + std::to_string(value) +
                                                        " but the gadget formula gives " +
                                                        std::to_string(gadget_count_formula(aux)));
  return value;
}

}  // namespace tmatch
