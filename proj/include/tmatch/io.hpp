#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "tmatch/detect.hpp"
#include "tmatch/graph.hpp"

namespace tmatch {

struct Instance {
  Graph graph;
  Variant variant;
  bool weighted = true;  // false when the edge lines carry no weights
};

// Header `n m t variant`, then `p q` for kpq, then m lines `u v [w]`.
// Blank lines and lines starting with '#' are skipped. Throws Malformed,
// or Bound for degree or weight violations.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);
Instance parse_instance_string(const std::string& text);

void write_instance(std::ostream& os, const Graph& g, const Variant& variant, bool weighted);

}  // namespace tmatch
