#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "tmatch/io.hpp"

using namespace tmatch;
using namespace tmtest;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_instance_string(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("accepted: " << text);
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("weighted and unweighted files") {
  Instance a = parse_instance_string("# K3\n3 3 3 restricted\n0 1 4\n\n1 2 5\n0 2 6\n");
  CHECK(a.weighted);
  CHECK(a.graph.m() == 3);
  CHECK(a.graph.edge(0).w == 8);

  Instance b = parse_instance_string("6 12 4 kpq\n3 2\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n");
  CHECK_FALSE(b.weighted);
  CHECK(b.variant.kind == VariantKind::KpqFree);
  CHECK(b.variant.p == 3);
  CHECK(b.graph.edge(0).w == 2);
}

TEST_CASE("malformed input") {
  CHECK(kind_of("") == ErrorKind::Malformed);
  CHECK(kind_of("3 1 3 weird\n0 1\n") == ErrorKind::Malformed);
  CHECK(kind_of("3 2 3 restricted\n0 1 1\n1 2\n") == ErrorKind::Malformed);
  CHECK(kind_of("3 1 3 restricted\n0 7\n") == ErrorKind::Malformed);
  CHECK(kind_of("3 2 3 restricted\n0 1\n") == ErrorKind::Malformed);
  CHECK(kind_of("3 1 3 restricted\n0 x\n") == ErrorKind::Malformed);
  CHECK(kind_of("6 0 4 kpq\n2 2\n") == ErrorKind::Malformed);
  CHECK(kind_of("6 0 2 restricted\n") == ErrorKind::Malformed);
}

TEST_CASE("bound violations") {
  CHECK(kind_of("3 1 3 restricted\n0 1 -2\n") == ErrorKind::Bound);
  std::ostringstream os;
  os << "6 15 3 restricted\n";
  for (auto [u, v] : complete(6)) os << u << ' ' << v << '\n';
  CHECK(kind_of(os.str()) == ErrorKind::Bound);
}

TEST_CASE("write then parse") {
  Graph g = graph_from(6, 4, octahedron());
  for (EdgeId e = 0; e < g.m(); ++e) g.set_weight(e, e + 1);
  std::ostringstream os;
  write_instance(os, g, Variant::kpq(3, 2), true);
  Instance back = parse_instance_string(os.str());
  REQUIRE(back.graph.m() == g.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    CHECK(back.graph.edge(e).u == g.edge(e).u);
    CHECK(back.graph.edge(e).w == g.edge(e).w);
  }
  CHECK(back.variant.p == 3);
}
