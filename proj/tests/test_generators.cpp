#include <doctest.h>

#include "support.hpp"
#include "tmatch/potentials.hpp"

using namespace tmatch;
using namespace tmtest;

namespace {

std::vector<std::pair<Vertex, Vertex>> pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

TEST_CASE("seeded stream is fixed") {
  Rng a(1), b(1);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng c(0);
  CHECK(c.next() == 0xe220a8397b1dcdafULL);
}

TEST_CASE("random bounded graphs") {
  CHECK(pairs(random_bounded(10, 3, 0.5, 42)) == pairs(random_bounded(10, 3, 0.5, 42)));
  CHECK(random_bounded(10, 3, 0.0, 42).m() == 0);
  Graph full = random_bounded(5, 3, 1.0, 3);
  CHECK(full.max_degree() <= 4);
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(random_bounded(200, 3, 0.05, s).max_degree() <= 4);
  CHECK_THROWS_AS(random_bounded(10, 2, 0.5, 1), Error);
}

TEST_CASE("planted structures") {
  Graph g(8, 3);
  plant_forbidden(g, PlantSpec{PlantKind::Clique, 0, 0, 0}, 2, 1);
  CHECK(find_all_forbidden(g, Variant::restricted()).subgraphs.size() == 2);

  Graph pair(5, 3);
  plant_forbidden(pair, PlantSpec{PlantKind::CliquePair, 0, 0, 0}, 1, 1);
  auto d = find_all_forbidden(pair, Variant::restricted());
  CHECK(d.subgraphs.size() == 2);
  CHECK(d.intersections.pairs.size() == 1);

  Graph dense(6, 4);
  plant_forbidden(dense, PlantSpec{PlantKind::DenseCluster, 3, 2, 3}, 1, 1);
  auto dd = detect(dense, Variant::kpq(3, 2));
  bool found = false;
  for (const auto& h : dd.subgraphs)
    if (h.kind == Kind::Dense) found = h.core.size() == 6;
  CHECK(found);

  Graph small(5, 3);
  CHECK_THROWS_AS(plant_forbidden(small, PlantSpec{PlantKind::Biclique, 0, 0, 0}, 1, 1), Error);
}

TEST_CASE("vertex-induced weights") {
  Graph g(8, 3);
  plant_forbidden(g, PlantSpec{PlantKind::Clique, 0, 0, 0}, 2, 5);
  auto d = detect(g, Variant::restricted());

  WeightSpec zero;
  zero.potential_lo = zero.potential_hi = 0;
  vertex_induced_weights(g, d.subgraphs, zero, 1);
  for (const auto& e : g.edges()) CHECK(e.w == 0);

  WeightSpec unit;
  unit.unweighted = true;
  vertex_induced_weights(g, d.subgraphs, unit, 1);
  for (const auto& e : g.edges()) CHECK(e.w == 2);

  WeightSpec ranged;
  ranged.potential_lo = 1;
  ranged.potential_hi = 5;
  vertex_induced_weights(g, d.subgraphs, ranged, 9);
  for (const auto& h : d.subgraphs) {
    auto pf = extract_potential(g, h);
    REQUIRE(pf);
    for (Vertex v : h.vertices) {
      CHECK(pf->at(v) >= 2);
      CHECK(pf->at(v) <= 10);
    }
  }
}

TEST_CASE("generated instances are valid inputs") {
  for (const auto& c : small_configs()) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      Graph g = small_instance(c, seed, 12, true);
      CHECK_NOTHROW(g.validate_degrees());
      for (const auto& e : g.edges()) CHECK(e.w >= 0);
      Detection d = detect(g, c.variant);
      for (const auto& h : d.subgraphs)
        if (!h.absorbed()) CHECK(extract_potential(g, h).has_value());
    }
  }
}

TEST_CASE("plant names round trip") {
  for (auto k : {PlantKind::Clique, PlantKind::Biclique, PlantKind::Partite, PlantKind::CliquePair,
                 PlantKind::BicliquePair, PlantKind::CliqueBiclique, PlantKind::PartitePair, PlantKind::DenseCluster})
    CHECK(parse_plant_kind(plant_kind_name(k)) == k);
  CHECK_THROWS_AS(parse_plant_kind("triangle"), Error);
}
