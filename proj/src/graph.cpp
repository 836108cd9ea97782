#include "tmatch/graph.hpp"

#include <algorithm>

namespace tmatch {

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Graph::Graph(int n, int t) : t_(t), adj_(n) {
  if (n < 0) fail(ErrorKind::Argument, "negative vertex count");
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n()) fail(ErrorKind::Argument, "vertex " + std::to_string(v) + " out of range");
}

EdgeId Graph::add_edge(Vertex u, Vertex v, Weight input_weight) {
  if (u < 0 || v < 0 || u >= n() || v >= n())
    fail(ErrorKind::Malformed, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) fail(ErrorKind::Malformed, "self-loop at vertex " + std::to_string(u));
  if (input_weight < 0)
    fail(ErrorKind::Bound, "negative weight on edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (input_weight > kMaxInputWeight)
    fail(ErrorKind::Bound, "weight on edge (" + std::to_string(u) + "," + std::to_string(v) + ") is too large");
  if (find_edge(u, v) >= 0)
    fail(ErrorKind::Malformed, "parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  EdgeId id = m();
  edges_.push_back(Edge{std::min(u, v), std::max(u, v), 2 * input_weight});
  adj_[u].emplace_back(v, id);
  adj_[v].emplace_back(u, id);
  return id;
}

void Graph::set_weight(EdgeId e, Weight input_weight) {
  if (input_weight < 0) fail(ErrorKind::Bound, "negative weight");
  if (input_weight > kMaxInputWeight) fail(ErrorKind::Bound, "weight too large");
  edges_.at(e).w = 2 * input_weight;
}

void Graph::validate_degrees() const {
  for (Vertex v = 0; v < n(); ++v)
    if (degree(v) > t_ + 1)
      fail(ErrorKind::Bound, "vertex " + std::to_string(v) + " has degree " + std::to_string(degree(v)) +
                                 " > t+1 = " + std::to_string(t_ + 1));
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

EdgeId Graph::find_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const auto& [x, e] : a)
    if (x == target) return e;
  return -1;
}

Weight Graph::total_weight() const {
  Weight s = 0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  Marks marks(g.n());
  return common_neighbors(g, u, v, marks);
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v, Marks& marks) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) fail(ErrorKind::Argument, "common_neighbors needs two distinct vertices");
  marks.clear();
  for (const auto& [x, e] : g.adj(u)) marks.set(x);
  std::vector<Vertex> out;
  for (const auto& [x, e] : g.adj(v))
    if (marks.get(x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPair> induced_complement(const Graph& g, const std::vector<Vertex>& a) {
  Marks marks(g.n());
  return induced_complement(g, a, marks);
}

std::vector<VertexPair> induced_complement(const Graph& g, const std::vector<Vertex>& a, Marks& marks) {
  std::vector<VertexPair> out;
  for (Vertex x : a) g.check_vertex(x);
  for (std::size_t i = 0; i < a.size(); ++i) {
    marks.clear();
    for (const auto& [y, e] : g.adj(a[i])) marks.set(y);
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!marks.get(a[j])) out.emplace_back(a[i], a[j]);
  }
  return out;
}

Pattern classify_pattern(const std::vector<VertexPair>& edges, const std::vector<Vertex>& a) {
  Pattern p;
  if (edges.empty()) return p;
  if (edges.size() == 1) {
    p.kind = PatternKind::Star;
    p.centers = {std::min(edges[0].first, edges[0].second), std::max(edges[0].first, edges[0].second)};
    return p;
  }
  std::vector<int> deg(a.size(), 0);
  auto pos = [&](Vertex x) {
    return static_cast<std::size_t>(std::find(a.begin(), a.end(), x) - a.begin());
  };
  for (const auto& [x, y] : edges) {
    ++deg[pos(x)];
    ++deg[pos(y)];
  }
  int max_deg = *std::max_element(deg.begin(), deg.end());
  if (max_deg == 1) {
    p.kind = PatternKind::Matching;
    return p;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (deg[i] == static_cast<int>(edges.size())) {
      p.kind = PatternKind::Star;
      p.centers = {a[i]};
      return p;
    }
  }
  p.kind = PatternKind::Other;
  return p;
}

Vertex MultiGraph::add_vertex() {
  adj_.emplace_back();
  return n() - 1;
}

EdgeId MultiGraph::add_edge(const MultiEdge& e) {
  if (e.u < 0 || e.v < 0 || e.u >= n() || e.v >= n()) fail(ErrorKind::Argument, "multigraph edge out of range");
  if (e.u == e.v) fail(ErrorKind::Argument, "multigraph loops are not supported");
  EdgeId id = m();
  edges_.push_back(e);
  adj_[e.u].push_back(id);
  adj_[e.v].push_back(id);
  return id;
}

Capacity normalize(const MultiGraph& g, Capacity cap) {
  if (cap.size() != g.n()) fail(ErrorKind::Argument, "capacity vector size mismatch");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (cap.l[v] < 0 || cap.b[v] < cap.l[v]) fail(ErrorKind::Argument, "capacity interval must satisfy 0 <= l <= b");
    cap.b[v] = std::min(cap.b[v], g.degree(v));
    if (cap.l[v] > cap.b[v]) fail(ErrorKind::Infeasible, "lower bound exceeds degree at vertex " + std::to_string(v));
  }
  return cap;
}

}  // namespace tmatch
