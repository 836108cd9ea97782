#include <doctest.h>

#include "support.hpp"
#include "tmatch/recover.hpp"

using namespace tmatch;
using namespace tmtest;

namespace {

bool all_covered(const Graph& g, const Detection& d, const CoTMatching& co) {
  for (const auto& h : d.subgraphs)
    if (!co.covers(subgraph_edges(g, h))) return false;
  return true;
}

}  // namespace

TEST_CASE("K4 removes the edge between the half-edge ends") {
  Graph g = graph_from(4, 3, complete(4));
  Pipeline pl = run_pipeline(g, Variant::restricted(), SolveOptions{false, true, 0});
  std::vector<Vertex> ends;
  for (EdgeId e : pl.lb.edges)
    if (pl.aux.graph.edge(e).kind == EdgeKind::HalfEdge) ends.push_back(pl.aux.graph.edge(e).ref);
  REQUIRE(ends.size() == 2);
  CHECK(pl.result.cotmatching.size() == 1);
  CHECK(pl.result.cotmatching[0] == g.find_edge(ends[0], ends[1]));
  CHECK(pl.result.tmatching.size() == 5);
  CHECK(pl.result.weight == 10);
}

TEST_CASE("K33 removes one cross edge") {
  Graph g = graph_from(6, 3, complete_bipartite(3, 3));
  SolveResult r = solve(g, Variant::restricted());
  REQUIRE(r.cotmatching.size() == 1);
  const auto& e = g.edge(r.cotmatching[0]);
  CHECK((e.u < 3) != (e.v < 3));
  CHECK(r.tmatching.size() == 8);
}

TEST_CASE("K6 dense recovery") {
  Graph g = graph_from(6, 4, complete(6));
  SolveResult r = solve(g, Variant::kpq(3, 2), SolveOptions{false, true, 0});
  CHECK(r.cotmatching.size() == 4);
  std::vector<int> deg(6, 0);
  for (EdgeId e : r.cotmatching) ++deg[g.edge(e).u], ++deg[g.edge(e).v];
  CHECK(*std::max_element(deg.begin(), deg.end()) >= 2);
  CHECK(r.weight == 22);
}

TEST_CASE("octahedron keeps 11 edges") {
  SolveResult r = solve(graph_from(6, 4, octahedron()), Variant::kpq(3, 2));
  CHECK(r.tmatching.size() == 11);
}

TEST_CASE("K5 repair covers all five cliques") {
  Graph g = graph_from(5, 3, complete(5));
  Detection d = detect(g, Variant::restricted());
  CoTMatching co(g);
  for (Vertex v = 1; v < 5; ++v) co.add(0, v);
  CHECK_FALSE(all_covered(g, d, co));
  Weight before = co.weight();
  std::vector<RepairEvent> events;
  cover_unproblematic(g, d, co, events);
  CHECK(all_covered(g, d, co));
  CHECK(co.is_co_tmatching());
  CHECK(co.weight() <= before);
  CHECK_FALSE(events.empty());

  SolveResult r = solve(g, Variant::restricted(), SolveOptions{false, true, 0});
  CHECK(r.cotmatching.size() == 3);
}

TEST_CASE("covering input is left alone") {
  Graph g = graph_from(5, 3, complete(5));
  Detection d = detect(g, Variant::restricted());
  CoTMatching co(g);
  co.add(0, 1);
  co.add(2, 3);
  co.add(3, 4);
  std::vector<RepairEvent> events;
  cover_unproblematic(g, d, co, events);
  CHECK(events.empty());
  CHECK(co.edges().size() == 3);
}

TEST_CASE("clique sharing a square with a biclique") {
  Graph g(6, 3);
  plant_forbidden(g, PlantSpec{PlantKind::CliqueBiclique, 0, 0, 0}, 1, 3);
  SolveResult r = solve(g, Variant::restricted(), SolveOptions{false, true, 0});
  CHECK(r.weight == brute_force_optimum(g, Variant::restricted()).weight);
}

TEST_CASE("repairs from random starts never add weight") {
  Rng rng(11);
  const auto configs = small_configs();
  for (int ci : {0, 1, 2}) {
    const auto& c = configs[ci];
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      Graph g = small_instance(c, seed, 9, true);
      Detection d = detect(g, c.variant);
      CoTMatching co(g);
      for (const auto& h : d.subgraphs) {
        if (!h.problematic) continue;
        auto es = subgraph_edges(g, h);
        co.add(es[rng.below(es.size())]);
      }
      for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == g.t() + 1 && co.degree(v) == 0) co.add(g.adj(v)[rng.below(g.degree(v))].second);
      Weight before = co.weight();
      std::vector<RepairEvent> events;
      cover_unproblematic(g, d, co, events);
      CHECK(all_covered(g, d, co));
      CHECK(co.is_co_tmatching());
      CHECK(co.weight() <= before);
    }
  }
}

TEST_CASE("solution checks") {
  Graph g = graph_from(4, 3, complete(4));
  Detection d = detect(g, Variant::restricted());
  std::vector<EdgeId> all{0, 1, 2, 3, 4, 5};
  Certificate c = verify_solution(g, d, all);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.violation.empty());

  Graph star(5, 3);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  Detection none = detect(star, Variant::restricted());
  CHECK_FALSE(verify_solution(star, none, {0, 1, 2, 3}).ok);
  CHECK(verify_solution(star, none, {0, 1, 2}).ok);

  SolveResult r = solve(g, Variant::restricted());
  CHECK(verify_solution(g, d, r.tmatching).ok);
}
