#include "tmatch/gadgets.hpp"

#include <algorithm>
#include <set>

namespace tmatch {

std::string format_doubled(Weight w) {
  std::string s = std::to_string(w / 2);
  if (w % 2 != 0) {
    if (w < 0 && w / 2 == 0) s = "-0";
    s += ".5";
  }
  return s;
}

namespace {

class Builder {
 public:
  Builder(const Graph& g, AuxiliaryInstance& aux) : g_(g), aux_(aux) {}

  Vertex vertex(int l, int b) {
    Vertex v = aux_.graph.add_vertex();
    aux_.cap.l.push_back(l);
    aux_.cap.b.push_back(b);
    return v;
  }
  void half_edge(Vertex sub, Vertex orig, Weight r, int gadget) {
    aux_.graph.add_edge(MultiEdge{orig, sub, r, EdgeKind::HalfEdge, orig, gadget});
  }
  void internal_edge(Vertex a, Vertex b, int gadget) {
    aux_.graph.add_edge(MultiEdge{a, b, 0, EdgeKind::GadgetInternal, -1, gadget});
  }

 private:
  const Graph& g_;
  AuxiliaryInstance& aux_;
};

}  // namespace

AuxiliaryInstance build_auxiliary(const Graph& g, const Detection& det,
                                  const std::map<int, PotentialFunction>& potentials) {
  AuxiliaryInstance aux;
  aux.original_n = g.n();
  aux.original_m = g.m();
  aux.t = g.t();
  aux.graph = MultiGraph(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    bool full = g.degree(v) == g.t() + 1;
    aux.cap.l.push_back(full ? 1 : 0);
    aux.cap.b.push_back(full ? g.t() + 1 : g.degree(v));
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& ed = g.edge(e);
    aux.graph.add_edge(MultiEdge{ed.u, ed.v, ed.w, EdgeKind::Original, e, -1});
  }

  Builder bld(g, aux);
  std::set<Vertex> used;
  for (const auto& h : det.subgraphs) {
    if (!h.problematic) continue;
    for (Vertex v : h.vertices)
      TMATCH_CHECK(used.insert(v).second, "gadget targets overlap at vertex " + std::to_string(v));
    const auto& pf = potentials.at(h.id);
    TMATCH_CHECK(verify_vertex_induced(g, h, pf), "potential does not induce the subgraph weights");

    Gadget gd;
    gd.id = static_cast<int>(aux.gadgets.size());
    gd.subgraph = h.id;
    gd.kind = h.kind;
    gd.p = h.p;
    switch (h.kind) {
      case Kind::Kt1: {
        Vertex u = bld.vertex(2, 2);
        gd.sub = {u};
        gd.joined = {h.vertices};
        for (Vertex v : h.vertices) bld.half_edge(u, v, pf.at(v), gd.id);
        break;
      }
      case Kind::Ktt: {
        for (const auto& cls : h.classes) {
          Vertex u = bld.vertex(1, 1);
          gd.sub.push_back(u);
          gd.joined.push_back(cls);
          for (Vertex v : cls) bld.half_edge(u, v, pf.at(v), gd.id);
        }
        break;
      }
      case Kind::Kpq: {
        gd.z = bld.vertex(h.p - 2, h.p - 2);
        for (const auto& cls : h.classes) {
          Vertex u = bld.vertex(1, 1);
          gd.sub.push_back(u);
          gd.joined.push_back(cls);
          for (Vertex v : cls) bld.half_edge(u, v, pf.at(v), gd.id);
          bld.internal_edge(u, gd.z, gd.id);
        }
        break;
      }
      case Kind::Dense: {
        Vertex c = h.core.front();
        for (Vertex v : h.core)
          if (pf.at(v) < pf.at(c)) c = v;
        if (pf.at(c) < 0) {
          aux.skipped_dense.push_back(h.id);
          continue;
        }
        const int k = static_cast<int>(h.core.size()) / 2;
        gd.center = c;
        gd.core = h.core;
        gd.z = bld.vertex(h.p - k, h.p - k);
        gd.uc = bld.vertex(2, 2);
        bld.half_edge(gd.uc, c, pf.at(c), gd.id);
        bld.half_edge(gd.uc, c, pf.at(c), gd.id);
        bld.internal_edge(gd.uc, gd.z, gd.id);
        bld.internal_edge(gd.uc, gd.z, gd.id);
        for (const auto& cls : h.classes) {
          bool in_core = std::binary_search(h.core.begin(), h.core.end(), cls.front());
          if (in_core) continue;
          Vertex u = bld.vertex(1, 1);
          gd.sub.push_back(u);
          gd.joined.push_back(cls);
          for (Vertex v : cls) bld.half_edge(u, v, pf.at(v), gd.id);
          bld.internal_edge(u, gd.z, gd.id);
        }
        TMATCH_CHECK(static_cast<int>(gd.sub.size()) == h.p - k, "dense gadget class count mismatch");
        break;
      }
    }
    aux.gadgets.push_back(std::move(gd));
  }
  return aux;
}

GadgetStats gadget_stats(const AuxiliaryInstance& aux) {
  GadgetStats s;
  s.added_vertices = aux.graph.n() - aux.original_n;
  s.added_edges = aux.graph.m() - aux.original_m;
  for (int b : aux.cap.b) s.sum_b += b;
  return s;
}

void dump_auxiliary(const AuxiliaryInstance& aux, std::ostream& os) {
  for (const auto& e : aux.graph.edges()) {
    const char* kind = e.kind == EdgeKind::Original ? "original" : e.kind == EdgeKind::HalfEdge ? "half" : "internal";
    os << e.u << ' ' << e.v << ' ' << format_doubled(e.w) << ' ' << kind << ' ' << e.gadget << '\n';
  }
}

}  // namespace tmatch
