#pragma once

#include <string>
#include <vector>

#include "tmatch/detect.hpp"
#include "tmatch/gadgets.hpp"
#include "tmatch/graph.hpp"
#include "tmatch/lb_matching.hpp"
#include "tmatch/potentials.hpp"

namespace tmatch {

struct RepairEvent {
  int subgraph = -1;
  std::string rule;
};

// Removed edges, as a membership mask over the original edge ids.
class CoTMatching {
 public:
  explicit CoTMatching(const Graph& g) : g_(&g), in_(g.m(), 0), deg_(g.n(), 0) {}

  bool has(EdgeId e) const { return e >= 0 && in_[e]; }
  bool has(Vertex a, Vertex b) const { return has(g_->find_edge(a, b)); }
  void add(EdgeId e);
  void add(Vertex a, Vertex b);
  void remove(EdgeId e);
  void remove(Vertex a, Vertex b);
  int degree(Vertex v) const { return deg_[v]; }
  Weight weight() const { return weight_; }
  std::vector<EdgeId> edges() const;
  // Every vertex of degree t+1 touches a removed edge.
  bool is_co_tmatching() const;
  bool covers(const std::vector<EdgeId>& subgraph_edges) const;

 private:
  const Graph* g_;
  std::vector<char> in_;
  std::vector<int> deg_;
  Weight weight_ = 0;
};

CoTMatching matching_to_cotmatching(const Graph& g, const Detection& det, const AuxiliaryInstance& aux,
                                    const LbMatching& m, std::vector<RepairEvent>& events);

// Flips until every forbidden subgraph is covered; weight never increases.
void cover_unproblematic(const Graph& g, const Detection& det, CoTMatching& co, std::vector<RepairEvent>& events);

struct SolveStats {
  int forbidden = 0;
  int problematic = 0;
  int dense = 0;
  int skipped_dense = 0;
  int gadgets = 0;
  long long probes = 0;
  GadgetStats gadget;
  LbStats lb;
  Weight lb_weight = 0;       // doubled w'(M')
  Weight co_weight_raw = 0;   // before repairs
  long long count_identity = -1;  // unweighted only
  int repairs = 0;
};

struct SolveResult {
  std::vector<EdgeId> tmatching;    // sorted
  std::vector<EdgeId> cotmatching;  // sorted
  Weight weight = 0;                // doubled
  Weight co_weight = 0;             // doubled
  std::vector<RepairEvent> diagnostics;
  SolveStats stats;
};

struct Certificate {
  bool ok = true;
  std::string violation;
};

Certificate verify_solution(const Graph& g, const Detection& det, const std::vector<EdgeId>& tmatching);

SolveResult finalize(const Graph& g, const Detection& det, const CoTMatching& co);

struct SolveOptions {
  bool weighted = true;
  bool capped = true;  // unweighted: cap b at a small feasible matching first
  Weight ktt_delta = 0;
};

// Everything the pipeline computed, for tests and the CLI.
struct Pipeline {
  Detection detection;
  AuxiliaryInstance aux;
  LbMatching lb;
  SolveResult result;
};

Pipeline run_pipeline(const Graph& g, const Variant& variant, const SolveOptions& opt = {});
SolveResult solve(const Graph& g, const Variant& variant, const SolveOptions& opt = {});

}  // namespace tmatch
