#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "tmatch/detect.hpp"
#include "tmatch/generators.hpp"
#include "tmatch/io.hpp"
#include "tmatch/oracle.hpp"
#include "tmatch/recover.hpp"

namespace py = pybind11;
using namespace tmatch;

namespace {

using EdgeList = std::vector<std::tuple<int, int, Weight>>;

Variant make_variant(const std::string& variant, int p, int q) {
  if (variant == "restricted") return Variant::restricted();
  if (variant == "kpq") return Variant::kpq(p, q);
  fail(ErrorKind::Malformed, "unknown variant '" + variant + "'");
}

// Edges are (u, v) or (u, v, w) tuples.
Graph make_graph(int n, int t, const py::sequence& edges) {
  Graph g(n, t);
  for (auto item : edges) {
    auto e = item.cast<py::sequence>();
    if (e.size() != 2 && e.size() != 3) fail(ErrorKind::Malformed, "edges must be (u, v) or (u, v, w)");
    int u = e[0].cast<int>(), v = e[1].cast<int>();
    Weight w = e.size() == 3 ? e[2].cast<Weight>() : 1;
    if (u < 0 || u >= n || v < 0 || v >= n) fail(ErrorKind::Malformed, "vertex out of range");
    g.add_edge(u, v, w);
  }
  g.validate_degrees();
  return g;
}

py::list pairs_of(const Graph& g, const std::vector<EdgeId>& ids) {
  py::list out;
  for (EdgeId e : ids) out.append(py::make_tuple(g.edge(e).u, g.edge(e).v));
  return out;
}

py::dict solve_py(int n, int t, const py::sequence& edges, const std::string& variant, int p, int q, bool weighted) {
  Graph g = make_graph(n, t, edges);
  Variant v = make_variant(variant, p, q);
  SolveOptions opt;
  opt.weighted = weighted;
  Pipeline pl;
  {
    py::gil_scoped_release release;
    pl = run_pipeline(g, v, opt);
  }
  const auto& r = pl.result;
  const auto& st = r.stats;
  py::dict stats;
  stats["forbidden"] = st.forbidden;
  stats["problematic"] = st.problematic;
  stats["dense"] = st.dense;
  stats["skipped_dense"] = st.skipped_dense;
  stats["gadgets"] = st.gadgets;
  stats["probes"] = st.probes;
  stats["repairs"] = st.repairs;
  py::list diag;
  for (const auto& ev : r.diagnostics) diag.append(py::make_tuple(ev.subgraph, ev.rule));
  py::dict out;
  // Unweighted solves score every edge as 1.
  out["weight"] = r.weight / 2;
  out["edges"] = pairs_of(g, r.tmatching);
  out["co_edges"] = pairs_of(g, r.cotmatching);
  out["diagnostics"] = diag;
  out["stats"] = stats;
  return out;
}

py::list detect_py(int n, int t, const py::sequence& edges, const std::string& variant, int p, int q) {
  Graph g = make_graph(n, t, edges);
  Detection d = detect(g, make_variant(variant, p, q));
  py::list out;
  for (const auto& h : d.subgraphs) {
    py::dict rec;
    rec["id"] = h.id;
    rec["kind"] = kind_name(h.kind);
    rec["vertices"] = h.vertices;
    rec["classes"] = h.classes;
    rec["core"] = h.core;
    rec["weight2"] = h.weight;
    rec["problematic"] = h.problematic;
    rec["absorbed_by"] = h.absorbed_by;
    out.append(rec);
  }
  return out;
}

Weight oracle_py(int n, int t, const py::sequence& edges, const std::string& variant, int p, int q, bool weighted) {
  Graph g = make_graph(n, t, edges);
  if (!weighted)
    for (EdgeId e = 0; e < g.m(); ++e) g.set_weight(e, 1);
  return brute_force_optimum(g, make_variant(variant, p, q)).weight / 2;
}

EdgeList generate_py(int n, int t, std::uint64_t seed, double prob, const std::vector<std::pair<std::string, int>>& plants,
                     const std::string& variant, int p, int q, int core_classes, bool unweighted, Weight potential_lo,
                     Weight potential_hi, Weight noise) {
  if (t < 3) fail(ErrorKind::Argument, "t must be at least 3");
  Variant v = make_variant(variant, p, q);
  v.validate(t);
  Graph g(n, t);
  Rng rng(seed);
  for (const auto& [name, count] : plants)
    plant_forbidden(g, PlantSpec{parse_plant_kind(name), p, q, core_classes}, count, rng.next());
  add_random_edges(g, prob, rng.next());
  WeightSpec ws;
  ws.unweighted = unweighted;
  ws.potential_lo = potential_lo;
  ws.potential_hi = potential_hi;
  ws.noise_hi = noise;
  vertex_induced_weights(g, detect(g, v).subgraphs, ws, rng.next());
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w / 2);
  return out;
}

py::dict parse_py(const std::string& text) {
  Instance inst = parse_instance_string(text);
  EdgeList edges;
  for (const auto& e : inst.graph.edges()) edges.emplace_back(e.u, e.v, e.w / 2);
  py::dict out;
  out["n"] = inst.graph.n();
  out["t"] = inst.graph.t();
  out["variant"] = inst.variant.kind == VariantKind::KpqFree ? "kpq" : "restricted";
  out["p"] = inst.variant.p;
  out["q"] = inst.variant.q;
  out["weighted"] = inst.weighted;
  out["edges"] = edges;
  return out;
}

}  // namespace

PYBIND11_MODULE(_tmatch, m) {
  static py::exception<Error> base(m, "TmatchError", PyExc_ValueError);
  static py::exception<Error> malformed(m, "MalformedError", base.ptr());
  static py::exception<Error> bound(m, "BoundError", base.ptr());
  static py::exception<Error> not_induced(m, "NotVertexInducedError", base.ptr());
  static py::exception<Error> too_large(m, "TooLargeError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::Malformed:
        case ErrorKind::Argument: py::set_error(malformed, e.what()); break;
        case ErrorKind::Bound: py::set_error(bound, e.what()); break;
        case ErrorKind::NotVertexInduced: py::set_error(not_induced, e.what()); break;
        case ErrorKind::TooLarge: py::set_error(too_large, e.what()); break;
        default: py::set_error(base, e.what());
      }
    }
  });

  using namespace py::literals;
  m.def("solve", &solve_py, "n"_a, "t"_a, "edges"_a, "variant"_a = "restricted", "p"_a = 0, "q"_a = 0,
        "weighted"_a = true, "Maximum weight t-matching without forbidden subgraphs.");
  m.def("detect", &detect_py, "n"_a, "t"_a, "edges"_a, "variant"_a = "restricted", "p"_a = 0, "q"_a = 0);
  m.def("brute_force_optimum", &oracle_py, "n"_a, "t"_a, "edges"_a, "variant"_a = "restricted", "p"_a = 0,
        "q"_a = 0, "weighted"_a = true);
  m.def("generate", &generate_py, "n"_a, "t"_a, "seed"_a, "prob"_a = 0.3,
        "plants"_a = std::vector<std::pair<std::string, int>>{}, "variant"_a = "restricted", "p"_a = 0, "q"_a = 0,
        "core_classes"_a = 0, "unweighted"_a = false, "potential_lo"_a = 0, "potential_hi"_a = 5, "noise"_a = 10);
  m.def("parse_instance", &parse_py, "text"_a);
}
