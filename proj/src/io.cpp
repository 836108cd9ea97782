#include "tmatch/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace tmatch {

namespace {

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<long long> numbers(const std::string& line, int lineno, std::size_t lo, std::size_t hi) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) fail(ErrorKind::Malformed, "line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
    out.push_back(x);
  }
  if (out.size() < lo || out.size() > hi)
    fail(ErrorKind::Malformed, "line " + std::to_string(lineno) + ": expected " + std::to_string(lo) +
                                   (lo == hi ? "" : "-" + std::to_string(hi)) + " fields");
  return out;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) fail(ErrorKind::Malformed, "empty instance");
  std::istringstream head(lines[0]);
  long long n = -1, m = -1, t = -1;
  std::string variant;
  std::string extra;
  if (!(head >> n >> m >> t >> variant) || (head >> extra))
    fail(ErrorKind::Malformed, "header must be `n m t variant`");
  if (n < 0 || m < 0 || n > 100000000 || m > 100000000) fail(ErrorKind::Malformed, "bad n or m in header");
  Instance inst;
  std::size_t pos = 1;
  if (variant == "restricted") {
    inst.variant = Variant::restricted();
  } else if (variant == "kpq") {
    if (lines.size() < 2) fail(ErrorKind::Malformed, "kpq instance needs a `p q` line");
    auto pq = numbers(lines[1], 2, 2, 2);
    inst.variant = Variant::kpq(static_cast<int>(pq[0]), static_cast<int>(pq[1]));
    pos = 2;
  } else {
    fail(ErrorKind::Malformed, "unknown variant '" + variant + "' (expected restricted or kpq)");
  }
  inst.variant.validate(static_cast<int>(t));
  if (lines.size() - pos != static_cast<std::size_t>(m))
    fail(ErrorKind::Malformed, "header announces " + std::to_string(m) + " edges, found " +
                                   std::to_string(lines.size() - pos));
  inst.graph = Graph(static_cast<int>(n), static_cast<int>(t));
  int weighted = -1;
  for (std::size_t i = pos; i < lines.size(); ++i) {
    auto f = numbers(lines[i], static_cast<int>(i + 1), 2, 3);
    int has_w = f.size() == 3;
    if (weighted >= 0 && weighted != has_w) fail(ErrorKind::Malformed, "edge lines mix weighted and unweighted forms");
    weighted = has_w;
    if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n)
      fail(ErrorKind::Malformed, "line " + std::to_string(i + 1) + ": vertex out of range");
    inst.graph.add_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), has_w ? f[2] : 1);
  }
  inst.weighted = weighted != 0;
  inst.graph.validate_degrees();
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Malformed, "cannot open " + path);
  return parse_instance(in);
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void write_instance(std::ostream& os, const Graph& g, const Variant& variant, bool weighted) {
  bool kpq = variant.kind == VariantKind::KpqFree;
  os << g.n() << ' ' << g.m() << ' ' << g.t() << ' ' << (kpq ? "kpq" : "restricted") << '\n';
  if (kpq) os << variant.p << ' ' << variant.q << '\n';
  for (const auto& e : g.edges()) {
    os << e.u << ' ' << e.v;
    if (weighted) os << ' ' << e.w / 2;
    os << '\n';
  }
}

}  // namespace tmatch
