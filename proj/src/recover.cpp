#include "tmatch/recover.hpp"

#include <algorithm>
#include <map>

namespace tmatch {

void CoTMatching::add(EdgeId e) {
  TMATCH_CHECK(e >= 0, "co-t-matching edge does not exist");
  if (in_[e]) return;
  in_[e] = 1;
  ++deg_[g_->edge(e).u];
  ++deg_[g_->edge(e).v];
  weight_ += g_->edge(e).w;
}

void CoTMatching::add(Vertex a, Vertex b) { add(g_->find_edge(a, b)); }

void CoTMatching::remove(EdgeId e) {
  TMATCH_CHECK(e >= 0, "co-t-matching edge does not exist");
  if (!in_[e]) return;
  in_[e] = 0;
  --deg_[g_->edge(e).u];
  --deg_[g_->edge(e).v];
  weight_ -= g_->edge(e).w;
}

void CoTMatching::remove(Vertex a, Vertex b) { remove(g_->find_edge(a, b)); }

std::vector<EdgeId> CoTMatching::edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(in_.size()); ++e)
    if (in_[e]) out.push_back(e);
  return out;
}

bool CoTMatching::is_co_tmatching() const {
  for (Vertex v = 0; v < g_->n(); ++v)
    if (g_->degree(v) == g_->t() + 1 && deg_[v] == 0) return false;
  return true;
}

bool CoTMatching::covers(const std::vector<EdgeId>& subgraph_edges) const {
  for (EdgeId e : subgraph_edges)
    if (in_[e]) return true;
  return false;
}

namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::map<int, std::vector<int>> dense_members(const Detection& det) {
  std::map<int, std::vector<int>> out;
  for (const auto& h : det.subgraphs)
    if (h.absorbed()) out[h.absorbed_by].push_back(h.id);
  return out;
}

bool members_covered(const Graph& g, const Detection& det, const std::vector<int>& members, const CoTMatching& co) {
  for (int id : members)
    if (!co.covers(subgraph_edges(g, det.subgraphs[id]))) return false;
  return true;
}

void recover_dense(const Graph& g, const Detection& det, const Gadget& gd, const std::vector<char>& in_m, Vertex x1,
                   Vertex x2, CoTMatching& co, std::vector<RepairEvent>& events) {
  const auto& h = det.subgraphs[gd.subgraph];
  const Vertex c = gd.center;
  if (x1 != x2) {
    co.add(x1, x2);
    return;
  }
  TMATCH_CHECK(x1 == c, "double half-edge away from the center");
  auto core = [&](Vertex v) { return contains(gd.core, v); };
  const auto hedges = subgraph_edges(g, h);
  for (EdgeId e : hedges) {
    if (!in_m[e]) continue;
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    if (core(a) && core(b) && a != c && b != c) {
      co.remove(e);
      co.add(c, a);
      co.add(c, b);
      events.push_back({h.id, "dense-core-split"});
      return;
    }
  }
  std::vector<std::pair<Vertex, Vertex>> boundary;  // (core vertex, outside vertex)
  for (EdgeId e : hedges) {
    if (!in_m[e]) continue;
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    if (core(b) && !core(a)) std::swap(a, b);
    if (core(a) && !core(b) && a != c) {
      bool fresh = true;
      for (const auto& [v, u] : boundary) fresh = fresh && v != a;
      if (fresh) boundary.push_back({a, b});
    }
    if (boundary.size() == 2) break;
  }
  TMATCH_CHECK(boundary.size() == 2, "dense recovery found neither a core edge nor two boundary edges");
  const auto [v1, u1] = boundary[0];
  const auto [v2, u2] = boundary[1];
  co.remove(v1, u1);
  co.remove(v2, u2);
  co.add(v1, v2);
  co.add(c, u1);
  co.add(c, u2);
  events.push_back({h.id, "dense-boundary-rewire"});
}

// Star at the cheapest core vertex in place of a perfect matching of the core.
void star_repair(const Graph& g, const ForbiddenSubgraph& h, CoTMatching& co, std::vector<RepairEvent>& events) {
  Vertex best = -1;
  Weight best_w = 0;
  for (Vertex c : h.core) {
    Weight w = 0;
    for (Vertex v : h.core)
      if (v != c) w += g.edge(g.find_edge(c, v)).w;
    if (best < 0 || w < best_w) {
      best = c;
      best_w = w;
    }
  }
  for (Vertex a : h.core)
    for (Vertex b : h.core)
      if (a < b) co.remove(a, b);
  for (Vertex v : h.core)
    if (v != best) co.add(best, v);
  events.push_back({h.id, "negative-center-star"});
}

}  // namespace

CoTMatching matching_to_cotmatching(const Graph& g, const Detection& det, const AuxiliaryInstance& aux,
                                    const LbMatching& m, std::vector<RepairEvent>& events) {
  CoTMatching co(g);
  std::vector<char> in_m(aux.graph.m(), 0);
  std::vector<std::vector<EdgeId>> halves(aux.gadgets.size());
  for (EdgeId e : m.edges) {
    in_m[e] = 1;
    const auto& me = aux.graph.edge(e);
    if (me.kind == EdgeKind::Original) co.add(me.ref);
    if (me.kind == EdgeKind::HalfEdge) halves[me.gadget].push_back(e);
  }
  for (const auto& gd : aux.gadgets) {
    const auto& hs = halves[gd.id];
    TMATCH_CHECK(hs.size() == 2, "gadget " + std::to_string(gd.id) + " holds " + std::to_string(hs.size()) +
                                     " half-edges instead of two");
    Vertex x1 = aux.graph.edge(hs[0]).ref;
    Vertex x2 = aux.graph.edge(hs[1]).ref;
    if (gd.kind == Kind::Dense) {
      recover_dense(g, det, gd, in_m, x1, x2, co, events);
      continue;
    }
    TMATCH_CHECK(x1 != x2, "both half-edges of a gadget end at one vertex");
    co.add(x1, x2);
  }
  auto members = dense_members(det);
  for (int id : aux.skipped_dense) {
    if (members_covered(g, det, members[id], co)) continue;
    star_repair(g, det.subgraphs[id], co, events);
  }
  return co;
}

namespace {

class Repairer {
 public:
  Repairer(const Graph& g, const Detection& det, CoTMatching& co, std::vector<RepairEvent>& events)
      : g_(g), det_(det), co_(co), events_(events), edges_(det.subgraphs.size()), partners_(det.subgraphs.size()) {
    for (const auto& h : det.subgraphs)
      if (h.kind != Kind::Dense) edges_[h.id] = subgraph_edges(g, h);
    for (const auto& [a, b] : det.intersections.pairs) {
      partners_[a].push_back(b);
      partners_[b].push_back(a);
    }
    for (auto& p : partners_) std::sort(p.begin(), p.end());
  }

  bool covered(int id) const { return co_.covers(edges_[id]); }

  void run() {
    for (const auto& h : det_.subgraphs) {
      if (h.kind == Kind::Dense || covered(h.id)) continue;
      TMATCH_CHECK(!h.absorbed(), "dense member left uncovered: subgraph " + std::to_string(h.id));
      TMATCH_CHECK(!h.problematic, "problematic subgraph left uncovered: " + std::to_string(h.id));
      std::vector<char> before(det_.subgraphs.size(), 0);
      for (const auto& o : det_.subgraphs)
        if (o.kind != Kind::Dense) before[o.id] = covered(o.id);
      const Weight w0 = co_.weight();
      std::string rule = flip(h);
      TMATCH_CHECK(co_.weight() <= w0, "repair increased the weight");
      TMATCH_CHECK(covered(h.id), "repair did not cover subgraph " + std::to_string(h.id));
      for (const auto& o : det_.subgraphs)
        TMATCH_CHECK(!before[o.id] || covered(o.id), "repair uncovered subgraph " + std::to_string(o.id));
      for (Vertex v : touched_)
        TMATCH_CHECK(g_.degree(v) <= g_.t() || co_.degree(v) > 0, "repair left a full vertex uncovered");
      events_.push_back({h.id, rule});
    }
  }

 private:
  bool in_subgraph(int id, Vertex a, Vertex b) const {
    EdgeId e = g_.find_edge(a, b);
    return e >= 0 && std::binary_search(edges_[id].begin(), edges_[id].end(), e);
  }
  Weight w(Vertex a, Vertex b) const { return g_.edge(g_.find_edge(a, b)).w; }

  std::string flip(const ForbiddenSubgraph& h) {
    touched_.clear();
    for (int j : partners_[h.id]) {
      const auto& o = det_.subgraphs[j];
      if (o.absorbed() || o.kind == Kind::Dense) continue;
      if (h.kind == Kind::Kt1 && o.kind == Kind::Ktt && swap(h, o)) return "swap-with-Ktt";
    }
    for (int j : partners_[h.id]) {
      const auto& o = det_.subgraphs[j];
      if (o.absorbed() || o.kind != h.kind || h.weight > o.weight) continue;
      std::vector<Vertex> only_h, only_o;
      std::set_difference(h.vertices.begin(), h.vertices.end(), o.vertices.begin(), o.vertices.end(),
                          std::back_inserter(only_h));
      std::set_difference(o.vertices.begin(), o.vertices.end(), h.vertices.begin(), h.vertices.end(),
                          std::back_inserter(only_o));
      if (only_h.size() == 1 && only_o.size() == 1 && move(h, o, only_h[0], only_o[0])) return "move-to-heavier";
      if (h.kind == Kind::Ktt && only_h.size() == 2 && swap(h, o)) return "swap-with-Ktt";
    }
    fail(ErrorKind::Internal, "no repair applies to subgraph " + std::to_string(h.id));
  }

  // Replace (v1,u2),(v2,u1) by (v1,v2),(u1,u2); o is a K_{t,t}.
  bool swap(const ForbiddenSubgraph& h, const ForbiddenSubgraph& o) {
    const auto& a1 = o.classes[0];
    const auto& a2 = o.classes[1];
    for (Vertex u1 : a1) {
      if (contains(h.vertices, u1)) continue;
      for (Vertex u2 : a2) {
        if (contains(h.vertices, u2)) continue;
        for (Vertex v1 : a1) {
          if (!contains(h.vertices, v1) || !co_.has(v1, u2)) continue;
          for (Vertex v2 : a2) {
            if (!contains(h.vertices, v2) || !co_.has(v2, u1) || !in_subgraph(h.id, v1, v2)) continue;
            co_.remove(v1, u2);
            co_.remove(v2, u1);
            co_.add(v1, v2);
            co_.add(u1, u2);
            touched_ = {v1, v2, u1, u2};
            return true;
          }
        }
      }
    }
    return false;
  }

  // Move the removed edge (u',z) to (u,z) for the lowest z with w(u,z) <= w(u',z).
  bool move(const ForbiddenSubgraph& h, const ForbiddenSubgraph& o, Vertex u, Vertex u2) {
    for (Vertex z : h.vertices) {
      if (z == u || !in_subgraph(h.id, u, z) || !in_subgraph(o.id, u2, z)) continue;
      if (!co_.has(u2, z) || w(u, z) > w(u2, z)) continue;
      co_.remove(u2, z);
      co_.add(u, z);
      touched_ = {u, u2, z};
      return true;
    }
    return false;
  }

  const Graph& g_;
  const Detection& det_;
  CoTMatching& co_;
  std::vector<RepairEvent>& events_;
  std::vector<std::vector<EdgeId>> edges_;
  std::vector<std::vector<int>> partners_;
  std::vector<Vertex> touched_;
};

}  // namespace

void cover_unproblematic(const Graph& g, const Detection& det, CoTMatching& co, std::vector<RepairEvent>& events) {
  Repairer(g, det, co, events).run();
}

Certificate verify_solution(const Graph& g, const Detection& det, const std::vector<EdgeId>& tmatching) {
  Certificate cert;
  std::vector<char> in(g.m(), 0);
  std::vector<int> deg(g.n(), 0);
  for (EdgeId e : tmatching) {
    in[e] = 1;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (deg[v] > g.t()) {
      cert.ok = false;
      cert.violation = "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]);
      return cert;
    }
  for (const auto& h : det.subgraphs) {
    if (h.kind == Kind::Dense) continue;
    bool missing = false;
    for (EdgeId e : subgraph_edges(g, h)) missing = missing || !in[e];
    if (!missing) {
      cert.ok = false;
      cert.violation = std::string(kind_name(h.kind)) + " " + h.key() + " is contained";
      return cert;
    }
  }
  return cert;
}

SolveResult finalize(const Graph& g, const Detection& det, const CoTMatching& co) {
  TMATCH_CHECK(co.is_co_tmatching(), "removed edges miss a vertex of degree t+1");
  SolveResult r;
  r.cotmatching = co.edges();
  std::vector<char> in(g.m(), 0);
  for (EdgeId e : r.cotmatching) in[e] = 1;
  for (EdgeId e = 0; e < g.m(); ++e)
    if (!in[e]) r.tmatching.push_back(e);
  r.co_weight = co.weight();
  r.weight = g.total_weight() - co.weight();
  Certificate cert = verify_solution(g, det, r.tmatching);
  TMATCH_CHECK(cert.ok, "solution check failed: " + cert.violation);
  return r;
}

Pipeline run_pipeline(const Graph& g_in, const Variant& variant, const SolveOptions& opt) {
  variant.validate(g_in.t());
  g_in.validate_degrees();
  Graph unit;
  const Graph* gp = &g_in;
  if (!opt.weighted) {
    unit = g_in;
    for (EdgeId e = 0; e < unit.m(); ++e) unit.set_weight(e, 1);
    gp = &unit;
  }
  const Graph& g = *gp;

  Pipeline pl;
  pl.detection = detect(g, variant);
  const Detection& det = pl.detection;
  std::map<int, PotentialFunction> pots;
  for (const auto& h : det.subgraphs) {
    if (h.absorbed()) continue;
    if (!opt.weighted) {
      pots[h.id] = unit_potential(h);
      continue;
    }
    ExtractOptions eo;
    eo.delta = opt.ktt_delta;
    auto pf = extract_potential(g, h, eo);
    if (!pf) fail(ErrorKind::NotVertexInduced, "weights are not vertex-induced on " + std::string(kind_name(h.kind)) +
                                                   " " + h.key());
    pots[h.id] = std::move(*pf);
  }
  pl.aux = build_auxiliary(g, det, pots);

  SolveStats st;
  if (opt.weighted) {
    pl.lb = solve_min_weight_lb(pl.aux, &st.lb);
  } else {
    pl.lb = opt.capped ? solve_min_cardinality_capped(pl.aux, &st.lb) : solve_min_cardinality_lb(pl.aux.graph, pl.aux.cap, &st.lb);
    st.count_identity = count_weight_identity(pl.aux, pl.lb);
  }

  std::vector<RepairEvent> events;
  CoTMatching co = matching_to_cotmatching(g, det, pl.aux, pl.lb, events);
  st.co_weight_raw = co.weight();
  TMATCH_CHECK(co.weight() <= pl.lb.weight, "recovered co-t-matching is heavier than the (l,b)-matching");
  const std::size_t before = events.size();
  cover_unproblematic(g, det, co, events);
  pl.result = finalize(g, det, co);
  TMATCH_CHECK(pl.result.co_weight == pl.lb.weight, "co-t-matching weight differs from the (l,b)-matching optimum");

  for (const auto& h : det.subgraphs) {
    if (h.kind == Kind::Dense) {
      ++st.dense;
    } else {
      ++st.forbidden;
    }
    if (h.problematic && !h.absorbed()) ++st.problematic;
  }
  st.skipped_dense = static_cast<int>(pl.aux.skipped_dense.size());
  st.gadgets = static_cast<int>(pl.aux.gadgets.size());
  st.probes = det.stats.probes;
  st.gadget = gadget_stats(pl.aux);
  st.lb_weight = pl.lb.weight;
  st.repairs = static_cast<int>(events.size() - before);
  pl.result.diagnostics = std::move(events);
  pl.result.stats = st;
  return pl;
}

SolveResult solve(const Graph& g, const Variant& variant, const SolveOptions& opt) {
  return run_pipeline(g, variant, opt).result;
}

}  // namespace tmatch
