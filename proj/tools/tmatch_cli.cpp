#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "tmatch/detect.hpp"
#include "tmatch/gadgets.hpp"
#include "tmatch/generators.hpp"
#include "tmatch/io.hpp"
#include "tmatch/oracle.hpp"
#include "tmatch/recover.hpp"

using json = nlohmann::ordered_json;
using namespace tmatch;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Malformed:
    case ErrorKind::Argument: return 2;
    case ErrorKind::Bound: return 3;
    case ErrorKind::NotVertexInduced: return 4;
    case ErrorKind::OracleMismatch: return 5;
    default: return 1;
  }
}

struct VariantFlags {
  std::string variant;
  std::optional<int> t, p, q;
  bool unweighted = false;
};

void add_variant_flags(CLI::App* cmd, VariantFlags& f) {
  cmd->add_option("--variant", f.variant, "restricted or kpq (overrides the file header)")
      ->check(CLI::IsMember({"restricted", "kpq"}));
  cmd->add_option("-t", f.t, "degree parameter (overrides the file header)");
  cmd->add_option("--p", f.p, "number of classes");
  cmd->add_option("--q", f.q, "class size");
  cmd->add_flag("--unweighted", f.unweighted, "treat every edge as weight 1");
}

Instance load(const std::string& path, const VariantFlags& f) {
  Instance inst = path == "-" ? parse_instance(std::cin) : parse_instance_file(path);
  if (f.t && *f.t != inst.graph.t()) {
    Graph g(inst.graph.n(), *f.t);
    for (const auto& e : inst.graph.edges()) g.add_edge(e.u, e.v, e.w / 2);
    g.validate_degrees();
    inst.graph = std::move(g);
  }
  if (!f.variant.empty()) {
    if (f.variant == "restricted") {
      inst.variant = Variant::restricted();
    } else {
      if (!f.p || !f.q) fail(ErrorKind::Malformed, "--variant kpq needs --p and --q");
      inst.variant = Variant::kpq(*f.p, *f.q);
    }
  } else if (f.p || f.q) {
    if (!f.p || !f.q) fail(ErrorKind::Malformed, "--p and --q go together");
    inst.variant = Variant::kpq(*f.p, *f.q);
  }
  inst.variant.validate(inst.graph.t());
  if (f.unweighted) inst.weighted = false;
  return inst;
}

json edge_list(const Graph& g, const std::vector<EdgeId>& ids) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (EdgeId e : ids) es.push_back({g.edge(e).u, g.edge(e).v});
  std::sort(es.begin(), es.end());
  json out = json::array();
  for (const auto& [u, v] : es) out.push_back({u, v});
  return out;
}

json stats_json(const SolveStats& s) {
  json j;
  j["forbidden"] = s.forbidden;
  j["problematic"] = s.problematic;
  j["dense"] = s.dense;
  j["skipped_dense"] = s.skipped_dense;
  j["gadgets"] = s.gadgets;
  j["probes"] = s.probes;
  j["aux_added_vertices"] = s.gadget.added_vertices;
  j["aux_added_edges"] = s.gadget.added_edges;
  j["sum_b"] = s.gadget.sum_b;
  j["lb_weight"] = format_doubled(s.lb_weight);
  j["expanded_vertices"] = s.lb.expanded_vertices;
  j["expanded_edges"] = s.lb.expanded_edges;
  j["certificate_ok"] = s.lb.certificate_ok;
  if (s.count_identity >= 0) j["count_identity"] = s.count_identity;
  j["repairs"] = s.repairs;
  return j;
}

int run_solve(const std::string& path, const VariantFlags& f, bool as_json, bool oracle_check,
              const std::string& dump_aux, long long delta) {
  Instance inst = load(path, f);
  SolveOptions opt;
  opt.weighted = inst.weighted;
  opt.ktt_delta = 2 * delta;
  Pipeline pl = run_pipeline(inst.graph, inst.variant, opt);
  const Graph& g = inst.graph;
  const SolveResult& r = pl.result;
  if (!dump_aux.empty()) {
    std::ofstream os(dump_aux);
    if (!os) fail(ErrorKind::Argument, "cannot write " + dump_aux);
    dump_auxiliary(pl.aux, os);
  }
  if (as_json) {
    json j;
    j["weight"] = r.weight / 2;
    j["edges"] = edge_list(g, r.tmatching);
    j["co_edges"] = edge_list(g, r.cotmatching);
    json d = json::array();
    for (const auto& ev : r.diagnostics) d.push_back({{"subgraph", ev.subgraph}, {"rule", ev.rule}});
    j["diagnostics"] = d;
    j["stats"] = stats_json(r.stats);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "weight " << r.weight / 2 << '\n' << "edges " << r.tmatching.size() << '\n';
    for (const auto& e : edge_list(g, r.tmatching)) std::cout << e[0] << ' ' << e[1] << '\n';
  }
  if (oracle_check) {
    if (g.n() > 14 || g.m() > 40) {
      std::cerr << "oracle check skipped: needs n <= 14 and m <= 40\n";
      return 0;
    }
    Graph og = g;
    if (!inst.weighted)
      for (EdgeId e = 0; e < og.m(); ++e) og.set_weight(e, 1);
    OracleOptimum o = brute_force_optimum(og, inst.variant);
    if (o.weight != r.weight)
      fail(ErrorKind::OracleMismatch, "oracle optimum " + format_doubled(o.weight) + " but solver found " +
                                          format_doubled(r.weight));
    std::cerr << "oracle check passed\n";
  }
  return 0;
}

int run_detect(const std::string& path, const VariantFlags& f, bool as_json) {
  Instance inst = load(path, f);
  Graph g = inst.graph;
  if (!inst.weighted)
    for (EdgeId e = 0; e < g.m(); ++e) g.set_weight(e, 1);
  Detection det = detect(g, inst.variant);
  if (as_json) {
    json list = json::array();
    for (const auto& h : det.subgraphs) {
      json j;
      j["id"] = h.id;
      j["kind"] = kind_name(h.kind);
      j["vertices"] = h.vertices;
      j["classes"] = h.classes;
      if (h.kind == Kind::Dense) j["core"] = h.core;
      j["weight"] = format_doubled(h.weight);
      j["problematic"] = h.problematic;
      j["absorbed_by"] = h.absorbed_by;
      list.push_back(j);
    }
    json pairs = json::array();
    for (const auto& [a, b] : det.intersections.pairs) pairs.push_back({a, b});
    std::cout << json{{"subgraphs", list}, {"intersections", pairs}, {"probes", det.stats.probes}}.dump(2) << '\n';
    return 0;
  }
  std::cout << det.subgraphs.size() << " subgraphs, " << det.intersections.pairs.size() << " intersecting pairs\n";
  for (const auto& h : det.subgraphs) {
    std::cout << h.id << ' ' << kind_name(h.kind) << (h.problematic ? " problematic" : " unproblematic") << " w="
              << format_doubled(h.weight) << " {";
    for (std::size_t i = 0; i < h.vertices.size(); ++i) std::cout << (i ? "," : "") << h.vertices[i];
    std::cout << '}';
    if (h.kind == Kind::Dense) {
      std::cout << " core {";
      for (std::size_t i = 0; i < h.core.size(); ++i) std::cout << (i ? "," : "") << h.core[i];
      std::cout << '}';
    }
    if (h.absorbed()) std::cout << " in dense " << h.absorbed_by;
    std::cout << '\n';
  }
  for (const auto& [a, b] : det.intersections.pairs) std::cout << "meet " << a << ' ' << b << '\n';
  return 0;
}

struct GenerateFlags {
  int n = 20;
  int t = 3;
  std::string variant = "restricted";
  int p = 0, q = 0;
  double prob = 0.2;
  std::vector<std::string> plant;
  int count = 1;
  int core_classes = 0;
  bool unweighted = false;
  long long potential_lo = 0, potential_hi = 5, noise = 10;
  bool half = false;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateFlags& f) {
  Variant var = f.variant == "kpq" ? Variant::kpq(f.p, f.q) : Variant::restricted();
  var.validate(f.t);
  Graph g(f.n, f.t);
  std::uint64_t salt = 0;
  for (const auto& kind : f.plant) {
    PlantSpec ps;
    ps.kind = parse_plant_kind(kind);
    ps.p = f.p;
    ps.q = f.q;
    ps.core_classes = f.core_classes;
    plant_forbidden(g, ps, f.count, f.seed + 7919 * ++salt);
  }
  add_random_edges(g, f.prob, f.seed);
  WeightSpec ws;
  ws.unweighted = f.unweighted;
  ws.potential_lo = f.potential_lo;
  ws.potential_hi = f.potential_hi;
  ws.half_potentials = f.half;
  ws.noise_hi = f.noise;
  if (!f.unweighted) vertex_induced_weights(g, detect(g, var).subgraphs, ws, f.seed ^ 0x5eedULL);
  if (f.out.empty()) {
    write_instance(std::cout, g, var, !f.unweighted);
  } else {
    std::ofstream os(f.out);
    if (!os) fail(ErrorKind::Argument, "cannot write " + f.out);
    write_instance(os, g, var, !f.unweighted);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum weight t-matchings without forbidden complete partite subgraphs"};
  app.require_subcommand(1);

  std::string path;
  VariantFlags vf;
  bool as_json = false, oracle_check = false;
  std::string dump_aux;
  long long delta = 0;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file ('-' reads stdin)");
  solve_cmd->add_option("file", path, "instance file")->required();
  add_variant_flags(solve_cmd, vf);
  solve_cmd->add_flag("--json", as_json, "structured output");
  solve_cmd->add_flag("--oracle-check", oracle_check, "compare with brute force (small instances)");
  solve_cmd->add_option("--dump-aux", dump_aux, "write the auxiliary multigraph as `u v w kind gadget`");
  solve_cmd->add_option("--ktt-delta", delta, "shift of K_{t,t} potentials between the two classes");

  std::string detect_path;
  VariantFlags df;
  bool detect_json = false;
  auto* detect_cmd = app.add_subcommand("detect", "list forbidden subgraphs and problematic flags");
  detect_cmd->add_option("file", detect_path, "instance file")->required();
  add_variant_flags(detect_cmd, df);
  detect_cmd->add_flag("--json", detect_json, "structured output");

  GenerateFlags gf;
  auto* gen_cmd = app.add_subcommand("generate", "write a seeded random instance");
  gen_cmd->add_option("-n", gf.n, "vertices");
  gen_cmd->add_option("-t", gf.t, "degree parameter");
  gen_cmd->add_option("--variant", gf.variant)->check(CLI::IsMember({"restricted", "kpq"}));
  gen_cmd->add_option("--p", gf.p);
  gen_cmd->add_option("--q", gf.q);
  gen_cmd->add_option("--prob", gf.prob, "edge probability of the random part");
  gen_cmd->add_option("--plant", gf.plant,
                      "clique, biclique, partite, clique-pair, biclique-pair, clique-biclique, partite-pair, dense");
  gen_cmd->add_option("--count", gf.count, "copies per --plant");
  gen_cmd->add_option("--core-classes", gf.core_classes, "dense: classes joined inside (0 = all)");
  gen_cmd->add_flag("--unweighted", gf.unweighted);
  gen_cmd->add_option("--potential-lo", gf.potential_lo);
  gen_cmd->add_option("--potential-hi", gf.potential_hi);
  gen_cmd->add_flag("--half", gf.half, "potentials in x + 1/2");
  gen_cmd->add_option("--noise", gf.noise, "max weight of edges outside forbidden subgraphs");
  gen_cmd->add_option("--seed", gf.seed);
  gen_cmd->add_option("-o,--output", gf.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*solve_cmd) return run_solve(path, vf, as_json, oracle_check, dump_aux, delta);
    if (*detect_cmd) return run_detect(detect_path, df, detect_json);
    if (*gen_cmd) return run_generate(gf);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}
