#include "tmatch/detect.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace tmatch {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Kt1: return "Kt1";
    case Kind::Ktt: return "Ktt";
    case Kind::Kpq: return "Kpq";
    case Kind::Dense: return "Dense";
  }
  return "?";
}

std::string ForbiddenSubgraph::key() const {
  std::string s = kind_name(kind);
  s += ':';
  if (classes.empty()) {
    for (Vertex v : vertices) s += std::to_string(v) + ',';
  } else {
    for (const auto& c : classes) {
      for (Vertex v : c) s += std::to_string(v) + ',';
      s += '|';
    }
  }
  return s;
}

void Variant::validate(int t) const {
  if (t < 3) fail(ErrorKind::Malformed, "t must be at least 3 (got " + std::to_string(t) + ")");
  if (kind == VariantKind::KpqFree) {
    if (p < 2 || q < 1) fail(ErrorKind::Malformed, "need p >= 2 and q >= 1");
    if ((p - 1) * q != t)
      fail(ErrorKind::Malformed, "(p-1)*q must equal t: (" + std::to_string(p) + "-1)*" + std::to_string(q) +
                                     " != " + std::to_string(t));
  }
}

std::string Variant::name() const {
  if (kind == VariantKind::Restricted) return "restricted";
  return "kpq(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<const ForbiddenSubgraph*> Detection::targets() const {
  std::vector<const ForbiddenSubgraph*> out;
  for (const auto& h : subgraphs)
    if (!h.absorbed()) out.push_back(&h);
  return out;
}

namespace {

using Classes = std::vector<std::vector<Vertex>>;

Kind kind_for(int p, int q) {
  if (q == 1) return Kind::Kt1;
  if (p == 2) return Kind::Ktt;
  return Kind::Kpq;
}

ForbiddenSubgraph make_subgraph(int p, int q, Classes classes) {
  ForbiddenSubgraph h;
  h.kind = kind_for(p, q);
  h.p = p;
  h.q = q;
  for (auto& c : classes) {
    std::sort(c.begin(), c.end());
    h.vertices.insert(h.vertices.end(), c.begin(), c.end());
  }
  std::sort(h.vertices.begin(), h.vertices.end());
  std::sort(classes.begin(), classes.end());
  if (h.kind != Kind::Kt1) h.classes = std::move(classes);
  return h;
}

// Groups components into k classes of exactly q vertices each.
void group_components(const Classes& comps, std::size_t idx, int k, int q, Classes& groups,
                      std::vector<Classes>& out) {
  if (idx == comps.size()) {
    if (static_cast<int>(groups.size()) != k) return;
    for (const auto& gr : groups)
      if (static_cast<int>(gr.size()) != q) return;
    out.push_back(groups);
    return;
  }
  const auto& c = comps[idx];
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (static_cast<int>(groups[i].size() + c.size()) > q) continue;
    groups[i].insert(groups[i].end(), c.begin(), c.end());
    group_components(comps, idx + 1, k, q, groups, out);
    groups[i].resize(groups[i].size() - c.size());
  }
  if (static_cast<int>(groups.size()) < k) {
    groups.push_back(c);
    group_components(comps, idx + 1, k, q, groups, out);
    groups.pop_back();
  }
}

// Local searches on the subgraph induced by the alive vertices.
class Searcher {
 public:
  Searcher(const Graph& g, int p, int q)
      : g_(g), p_(p), q_(q), t_((p - 1) * q), alive_(g.n(), 1), marks_(g.n()), marks2_(g.n()) {}

  bool alive(Vertex v) const { return alive_[v]; }
  void kill(Vertex v) { alive_[v] = 0; }
  long long probes() const { return probes_; }
  void add_probes(long long k) { probes_ += k; }
  int t() const { return t_; }

  std::vector<Vertex> neighbors(Vertex v, std::size_t limit = SIZE_MAX, Vertex skip = -1) {
    std::vector<Vertex> out;
    for (const auto& [x, e] : g_.adj(v)) {
      ++probes_;
      if (alive_[x] && x != skip) {
        out.push_back(x);
        if (out.size() >= limit) break;
      }
    }
    return out;
  }

  std::vector<Vertex> common(Vertex a, Vertex b) {
    marks_.clear();
    for (Vertex x : neighbors(a)) marks_.set(x);
    std::vector<Vertex> out;
    for (Vertex x : neighbors(b))
      if (marks_.get(x)) out.push_back(x);
    return out;
  }

  std::optional<Vertex> partner(Vertex v) {
    auto nv = neighbors(v, 2);
    if (nv.size() < 2) return std::nullopt;
    const int need = std::max(p_ - 2, 1) * q_;
    for (Vertex u : nv) {
      for (Vertex z : neighbors(u, 2, v)) {
        if (static_cast<int>(common(v, z).size()) >= need) return z;
      }
    }
    return std::nullopt;
  }

  std::vector<ForbiddenSubgraph> search(Vertex v) {
    std::vector<ForbiddenSubgraph> out;
    if (!alive_[v]) return out;
    auto nb = neighbors(v);
    if (static_cast<int>(nb.size()) < t_) return out;
    std::sort(nb.begin(), nb.end());
    std::vector<int> options;
    if (static_cast<int>(nb.size()) == t_) {
      options.push_back(-1);
    } else {
      for (int i = 0; i < static_cast<int>(nb.size()); ++i) options.push_back(i);
    }
    if (q_ == 1) {
      search_clique(v, nb, options, out);
    } else {
      for (int opt : options) search_partite(v, nb, opt, out);
    }
    return out;
  }

 private:
  std::vector<VertexPair> complement(const std::vector<Vertex>& a) {
    probes_ += static_cast<long long>(a.size()) * (t_ + 1);
    return induced_complement(g_, a, marks2_);
  }

  // Complement of G[{v} ∪ N(v)] is empty or a star whose center is excluded.
  void search_clique(Vertex v, const std::vector<Vertex>& nb, const std::vector<int>& options,
                     std::vector<ForbiddenSubgraph>& out) {
    Pattern pat = classify_pattern(complement(nb), nb);
    std::vector<int> chosen;
    if (pat.kind == PatternKind::Empty) {
      chosen = options;
    } else if (pat.kind == PatternKind::Star && options.front() >= 0) {
      for (Vertex c : pat.centers)
        chosen.push_back(static_cast<int>(std::lower_bound(nb.begin(), nb.end(), c) - nb.begin()));
    }
    for (int opt : chosen) {
      Classes cls;
      cls.push_back({v});
      for (int i = 0; i < static_cast<int>(nb.size()); ++i)
        if (i != opt) cls.push_back({nb[i]});
      out.push_back(make_subgraph(p_, q_, std::move(cls)));
    }
  }

  // S = N(v) minus the excluded slot holds every class but v's; v's class is
  // completed from common neighbours of S, and S splits along its complement.
  void search_partite(Vertex v, const std::vector<Vertex>& nb, int opt, std::vector<ForbiddenSubgraph>& out) {
    std::vector<Vertex> s;
    for (int i = 0; i < static_cast<int>(nb.size()); ++i)
      if (i != opt) s.push_back(nb[i]);

    std::vector<Vertex> cand;
    marks_.clear();
    for (Vertex x : s) marks_.set(x);
    for (Vertex y : neighbors(s[0])) {
      if (y == v || marks_.get(y)) continue;
      int hits = 0;
      for (Vertex z : neighbors(y))
        if (marks_.get(z)) ++hits;
      if (hits == t_) cand.push_back(y);
    }
    if (static_cast<int>(cand.size()) < q_ - 1) return;

    // complement components of G[S]
    auto comp_edges = complement(s);
    std::vector<int> parent(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto pos = [&](Vertex x) { return static_cast<int>(std::lower_bound(s.begin(), s.end(), x) - s.begin()); };
    for (const auto& [a, b] : comp_edges) parent[find(pos(a))] = find(pos(b));
    std::map<int, std::vector<Vertex>> by_root;
    for (std::size_t i = 0; i < s.size(); ++i) by_root[find(static_cast<int>(i))].push_back(s[i]);
    Classes comps;
    for (auto& [r, c] : by_root) {
      if (static_cast<int>(c.size()) > q_) return;
      comps.push_back(std::move(c));
    }
    std::vector<Classes> groupings;
    Classes groups;
    group_components(comps, 0, p_ - 1, q_, groups, groupings);
    if (groupings.empty()) return;

    // (q-1)-subsets of the candidates complete v's class
    std::vector<int> idx(q_ - 1);
    for (int i = 0; i < q_ - 1; ++i) idx[i] = i;
    while (true) {
      std::vector<Vertex> own{v};
      for (int i : idx) own.push_back(cand[i]);
      for (const auto& gr : groupings) {
        Classes cls = gr;
        cls.push_back(own);
        out.push_back(make_subgraph(p_, q_, std::move(cls)));
      }
      int k = q_ - 2;
      while (k >= 0 && idx[k] == static_cast<int>(cand.size()) - (q_ - 1) + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < q_ - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  const Graph& g_;
  int p_, q_, t_;
  std::vector<char> alive_;
  Marks marks_;
  Marks marks2_;
  long long probes_ = 0;
};

struct Registry {
  std::vector<ForbiddenSubgraph>& list;
  std::unordered_map<std::string, int> ids;
  std::set<std::pair<int, int>> pairs;

  int intern(ForbiddenSubgraph h) {
    auto k = h.key();
    auto it = ids.find(k);
    if (it != ids.end()) return it->second;
    h.id = static_cast<int>(list.size());
    ids.emplace(k, h.id);
    list.push_back(std::move(h));
    return list.back().id;
  }
};

bool intersects(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

long long run_pass(const Graph& g, int p, int q, Registry& reg) {
  Searcher s(g, p, q);
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) < s.t()) s.kill(v);
  s.add_probes(g.n());
  for (Vertex v1 = 0; v1 < g.n(); ++v1) {
    while (s.alive(v1)) {
      auto v2 = s.partner(v1);
      if (!v2) {
        s.kill(v1);
        break;
      }
      auto found = s.search(v1);
      auto more = s.search(*v2);
      found.insert(found.end(), more.begin(), more.end());
      if (found.empty()) {
        auto common = s.common(v1, *v2);
        s.kill(v1);
        s.kill(*v2);
        for (Vertex x : common) s.kill(x);
        continue;
      }
      const auto h = found.front();
      std::vector<int> group;
      for (Vertex x : h.vertices)
        for (auto& f : s.search(x)) group.push_back(reg.intern(std::move(f)));
      std::sort(group.begin(), group.end());
      group.erase(std::unique(group.begin(), group.end()), group.end());
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j)
          if (intersects(reg.list[group[i]].vertices, reg.list[group[j]].vertices))
            reg.pairs.emplace(group[i], group[j]);
      for (Vertex x : h.vertices) s.kill(x);
    }
  }
  return s.probes();
}

}  // namespace

std::optional<Vertex> find_partner(const Graph& g, Vertex v, int p, int q) {
  g.check_vertex(v);
  Searcher s(g, p, q);
  return s.partner(v);
}

std::vector<ForbiddenSubgraph> find_kpq_at(const Graph& g, Vertex v, int p, int q) {
  g.check_vertex(v);
  Searcher s(g, p, q);
  auto found = s.search(v);
  std::vector<ForbiddenSubgraph> out;
  std::set<std::string> seen;
  for (auto& h : found)
    if (seen.insert(h.key()).second) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
  return out;
}

Detection find_all_forbidden(const Graph& g, const Variant& variant) {
  const int t = g.t();
  variant.validate(t);
  Detection det;
  Registry reg{det.subgraphs, {}, {}};
  if (variant.kind == VariantKind::Restricted) {
    det.stats.probes += run_pass(g, t + 1, 1, reg);
    det.stats.probes += run_pass(g, 2, t, reg);
    if (t == 3) {
      std::vector<std::vector<int>> ktt_at(g.n());
      for (const auto& h : det.subgraphs)
        if (h.kind == Kind::Ktt)
          for (Vertex x : h.vertices) ktt_at[x].push_back(h.id);
      for (const auto& h : det.subgraphs) {
        if (h.kind != Kind::Kt1) continue;
        for (Vertex x : h.vertices) {
          det.stats.probes += static_cast<long long>(ktt_at[x].size());
          for (int j : ktt_at[x]) reg.pairs.emplace(std::min(h.id, j), std::max(h.id, j));
        }
      }
    }
  } else {
    det.stats.probes += run_pass(g, variant.p, variant.q, reg);
  }
  det.intersections.pairs.assign(reg.pairs.begin(), reg.pairs.end());
  return det;
}

std::vector<ForbiddenSubgraph> find_dense(const Graph& g, std::vector<ForbiddenSubgraph>& list) {
  std::map<std::vector<Vertex>, std::vector<int>> by_set;
  for (const auto& h : list)
    if (h.kind == Kind::Kpq && h.q == 2 && !h.absorbed()) by_set[h.vertices].push_back(h.id);
  std::vector<ForbiddenSubgraph> created;
  for (const auto& [verts, ids] : by_set) {
    if (ids.size() < 2) continue;
    ForbiddenSubgraph d;
    d.kind = Kind::Dense;
    d.p = list[ids.front()].p;
    d.q = 2;
    d.vertices = verts;
    d.classes = list[ids.front()].classes;
    for (Vertex a : verts) {
      if (g.degree(a) != g.t() + 1) continue;
      bool inside = true;
      for (const auto& [x, e] : g.adj(a))
        if (!std::binary_search(verts.begin(), verts.end(), x)) inside = false;
      if (inside) d.core.push_back(a);
    }
    TMATCH_CHECK(d.core.size() % 2 == 0 && d.core.size() >= 4, "dense subgraph core must be even and at least 4");
    d.id = static_cast<int>(list.size());
    d.problematic = true;
    for (int i : ids) list[i].absorbed_by = d.id;
    list.push_back(d);
    created.push_back(d);
  }
  return created;
}

std::vector<EdgeId> subgraph_edges(const Graph& g, const ForbiddenSubgraph& h) {
  std::vector<EdgeId> out;
  auto need = [&](Vertex a, Vertex b) {
    EdgeId e = g.find_edge(a, b);
    TMATCH_CHECK(e >= 0, "forbidden subgraph references a missing edge");
    out.push_back(e);
  };
  if (h.kind == Kind::Kt1) {
    for (std::size_t i = 0; i < h.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < h.vertices.size(); ++j) need(h.vertices[i], h.vertices[j]);
  } else if (h.kind == Kind::Dense) {
    for (Vertex a : h.vertices)
      for (const auto& [x, e] : g.adj(a))
        if (a < x && std::binary_search(h.vertices.begin(), h.vertices.end(), x)) out.push_back(e);
  } else {
    for (std::size_t i = 0; i < h.classes.size(); ++i)
      for (std::size_t j = i + 1; j < h.classes.size(); ++j)
        for (Vertex a : h.classes[i])
          for (Vertex b : h.classes[j]) need(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight subgraph_weight(const Graph& g, const ForbiddenSubgraph& h) {
  Weight w = 0;
  for (EdgeId e : subgraph_edges(g, h)) w += g.edge(e).w;
  return w;
}

void classify_problematic(std::vector<ForbiddenSubgraph>& list, const Intersections& inter) {
  std::vector<std::vector<int>> partners(list.size());
  for (const auto& [a, b] : inter.pairs) {
    partners[a].push_back(b);
    partners[b].push_back(a);
  }
  for (auto& h : list) {
    if (h.kind == Kind::Dense) {
      h.problematic = true;
      continue;
    }
    if (h.absorbed()) {
      h.problematic = false;
      continue;
    }
    bool unproblematic = false;
    for (int j : partners[h.id]) {
      const auto& o = list[j];
      if (o.absorbed()) continue;
      if (h.kind == Kind::Kt1 && o.kind == Kind::Ktt) unproblematic = true;
      if (o.kind == h.kind && h.weight <= o.weight) unproblematic = true;
    }
    h.problematic = !unproblematic;
  }
  std::map<Vertex, int> owner;
  for (const auto& h : list) {
    if (!h.problematic) continue;
    for (Vertex v : h.vertices) {
      auto [it, fresh] = owner.emplace(v, h.id);
      TMATCH_CHECK(fresh, "problematic subgraphs " + std::to_string(it->second) + " and " + std::to_string(h.id) +
                              " share vertex " + std::to_string(v));
    }
  }
}

Detection detect(const Graph& g, const Variant& variant) {
  Detection det = find_all_forbidden(g, variant);
  if (variant.kind == VariantKind::KpqFree && variant.q == 2 && variant.p >= 3) find_dense(g, det.subgraphs);
  for (auto& h : det.subgraphs) h.weight = subgraph_weight(g, h);
  classify_problematic(det.subgraphs, det.intersections);
  return det;
}

}  // namespace tmatch
