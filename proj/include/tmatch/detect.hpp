#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tmatch/graph.hpp"

namespace tmatch {

enum class Kind { Kt1, Ktt, Kpq, Dense };
const char* kind_name(Kind k);

struct ForbiddenSubgraph {
  Kind kind = Kind::Kt1;
  int p = 0;
  int q = 0;
  std::vector<Vertex> vertices;              // sorted
  std::vector<std::vector<Vertex>> classes;  // sorted; empty for Kt1
  std::vector<Vertex> core;                  // Dense only
  Weight weight = 0;                         // doubled
  bool problematic = false;
  int id = -1;
  int absorbed_by = -1;  // id of the Dense record holding this K^p_2

  bool absorbed() const { return absorbed_by >= 0; }
  // Canonical key: vertices for cliques, classes otherwise.
  std::string key() const;
};

struct Intersections {
  std::vector<std::pair<int, int>> pairs;  // i < j
};

enum class VariantKind { Restricted, KpqFree };

struct Variant {
  VariantKind kind = VariantKind::Restricted;
  int p = 0;
  int q = 0;

  static Variant restricted() { return {}; }
  static Variant kpq(int p, int q) { return {VariantKind::KpqFree, p, q}; }
  // Throws Malformed unless (p-1)*q == t and t >= 3.
  void validate(int t) const;
  std::string name() const;
};

struct DetectStats {
  long long probes = 0;  // adjacency entries scanned
};

struct Detection {
  std::vector<ForbiddenSubgraph> subgraphs;  // subgraphs[i].id == i
  Intersections intersections;
  DetectStats stats;

  std::vector<const ForbiddenSubgraph*> targets() const;  // not absorbed
};

std::optional<Vertex> find_partner(const Graph& g, Vertex v, int p, int q);
std::vector<ForbiddenSubgraph> find_kpq_at(const Graph& g, Vertex v, int p, int q);

// All K^p_q's (or K_{t+1}'s and K_{t,t}'s) with intersecting pairs; no Dense grouping.
Detection find_all_forbidden(const Graph& g, const Variant& variant);

// q = 2: groups K^p_2's sharing a vertex set into Dense records appended to
// the list; members get absorbed_by set. Returns the new records.
std::vector<ForbiddenSubgraph> find_dense(const Graph& g, std::vector<ForbiddenSubgraph>& list);

std::vector<EdgeId> subgraph_edges(const Graph& g, const ForbiddenSubgraph& h);
Weight subgraph_weight(const Graph& g, const ForbiddenSubgraph& h);

void classify_problematic(std::vector<ForbiddenSubgraph>& list, const Intersections& inter);

// find_all_forbidden + find_dense + weights + classification.
Detection detect(const Graph& g, const Variant& variant);

}  // namespace tmatch
