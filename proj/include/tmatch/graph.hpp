#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tmatch {

using Vertex = int;
using EdgeId = int;
using Weight = std::int64_t;

// Input weights above this cannot be doubled and summed safely.
inline constexpr Weight kMaxInputWeight = Weight{1} << 40;

enum class ErrorKind {
  Malformed,         // unparsable input or bad parameters
  Bound,             // degree above t+1 or negative weight
  NotVertexInduced,  // weights are not vertex-induced on a forbidden subgraph
  OracleMismatch,
  Infeasible,
  TooLarge,
  Internal,
  Argument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);
#define TMATCH_CHECK(cond, msg) \
  do {                          \
    if (!(cond)) ::tmatch::fail(::tmatch::ErrorKind::Internal, msg); \
  } while (0)

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;  // twice the input weight
};

// Simple undirected graph. Weights are stored doubled.
class Graph {
 public:
  Graph() = default;
  Graph(int n, int t);

  // Rejects loops and parallel edges (Malformed) and negative weights (Bound).
  EdgeId add_edge(Vertex u, Vertex v, Weight input_weight = 1);
  void set_weight(EdgeId e, Weight input_weight);
  // Throws Bound if some vertex has degree above t+1.
  void validate_degrees() const;

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  int t() const { return t_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  const std::vector<std::pair<Vertex, EdgeId>>& adj(Vertex v) const { return adj_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  EdgeId find_edge(Vertex u, Vertex v) const;  // -1 when absent
  bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v) >= 0; }
  Weight total_weight() const;  // doubled
  void check_vertex(Vertex v) const;

 private:
  int t_ = 0;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
  std::vector<Edge> edges_;
};

// Stamp-based marking array; reset is O(1).
class Marks {
 public:
  explicit Marks(int n = 0) : stamp_(n, 0) {}
  void resize(int n) { stamp_.assign(n, 0); cur_ = 1; }
  void clear() {
    if (++cur_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      cur_ = 1;
    }
  }
  void set(int i) { stamp_[i] = cur_; }
  void unset(int i) { stamp_[i] = 0; }
  bool get(int i) const { return stamp_[i] == cur_; }
  int size() const { return static_cast<int>(stamp_.size()); }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t cur_ = 1;
};

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v, Marks& marks);

using VertexPair = std::pair<Vertex, Vertex>;

// Non-adjacent pairs (x < y by position in a) inside a.
std::vector<VertexPair> induced_complement(const Graph& g, const std::vector<Vertex>& a);
std::vector<VertexPair> induced_complement(const Graph& g, const std::vector<Vertex>& a, Marks& marks);

enum class PatternKind { Empty, Star, Matching, Other };
struct Pattern {
  PatternKind kind = PatternKind::Empty;
  std::vector<Vertex> centers;  // Star only
};
Pattern classify_pattern(const std::vector<VertexPair>& edges, const std::vector<Vertex>& a);

// Multigraph for the auxiliary instance.
enum class EdgeKind { Original, HalfEdge, GadgetInternal };

struct MultiEdge {
  Vertex u;
  Vertex v;
  Weight w;  // doubled, may be negative
  EdgeKind kind = EdgeKind::Original;
  int ref = -1;     // original edge id (Original) or original vertex (HalfEdge)
  int gadget = -1;  // gadget id for HalfEdge / GadgetInternal
};

class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n) : adj_(n) {}

  Vertex add_vertex();
  EdgeId add_edge(const MultiEdge& e);
  EdgeId add_edge(Vertex u, Vertex v, Weight w) { return add_edge(MultiEdge{u, v, w}); }

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<EdgeId>& adj(Vertex v) const { return adj_[v]; }
  const MultiEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  Vertex other(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

 private:
  std::vector<std::vector<EdgeId>> adj_;
  std::vector<MultiEdge> edges_;
};

struct Capacity {
  std::vector<int> l;
  std::vector<int> b;
  int size() const { return static_cast<int>(l.size()); }
};

// Clamp b to the degree; throws Infeasible when l exceeds the degree or b.
Capacity normalize(const MultiGraph& g, Capacity cap);

}  // namespace tmatch
