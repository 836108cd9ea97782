// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [path-to-tmatch-cli] [golden-dir]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tmatch/io.hpp"
#include "tmatch/lb_matching.hpp"
#include "tmatch/potentials.hpp"
#include "tmatch/recover.hpp"

using namespace tmatch;
using namespace tmtest;

namespace {

// Pinned tolerances and sizes.
constexpr Weight kWeightTolerance = 0;  // all comparisons are exact on doubled integers
constexpr int kSeedsPerConfig = 500;
constexpr int kMaxSmallN = 9;
constexpr int kDetectGraphs = 500;
constexpr int kMaxDetectN = 12;
constexpr int kLbInstances = 1000;
constexpr int kPotentialTrials = 200;
constexpr double kWeightedScaleSeconds = 60.0;
constexpr double kUnweightedScaleSeconds = 30.0;
constexpr double kProbeGrowthLimit = 2.4;
constexpr int kWeightedScaleN = 2000;
constexpr int kUnweightedScaleN = 20000;

std::string cli_path;
std::string golden_dir;

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  void miss(const std::string& what) {
    pass = false;
    if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + what;
  }
};

bool same(Weight a, Weight b) { return (a > b ? a - b : b - a) <= kWeightTolerance; }

Graph with_unit_weights(Graph g) {
  for (EdgeId e = 0; e < g.m(); ++e) g.set_weight(e, 1);
  return g;
}

std::string where(const Config& c, std::uint64_t seed, bool weighted) {
  return c.name + " seed " + std::to_string(seed) + (weighted ? " weighted" : " unweighted");
}

// Criteria 1, 3 and 4 share the same instances.
struct SmallRun {
  Outcome optimum, sandwich, identity;
  int instances = 0;
  int with_forbidden = 0;
  int with_dense = 0;
  int with_skipped_dense = 0;
  int with_repairs = 0;
};

long long formula_by_hand(const AuxiliaryInstance& aux, const Detection& det) {
  long long total = 0;
  for (const auto& gd : aux.gadgets) {
    const auto& h = det.subgraphs[gd.subgraph];
    switch (gd.kind) {
      case Kind::Kt1:
      case Kind::Ktt: total += 1; break;
      case Kind::Kpq: total += h.p - 1; break;
      case Kind::Dense: total += h.p - static_cast<long long>(h.core.size()) / 2 + 1; break;
    }
  }
  return total;
}

SmallRun run_small() {
  SmallRun run;
  for (const auto& c : small_configs()) {
    for (int s = 0; s < kSeedsPerConfig; ++s) {
      for (bool weighted : {true, false}) {
        std::uint64_t seed = 1000003ULL * s + 17;
        std::string at = where(c, seed, weighted);
        Graph g = small_instance(c, seed, kMaxSmallN, weighted);
        Graph scored = weighted ? g : with_unit_weights(g);
        ++run.instances;
        OracleOptimum best = brute_force_optimum(scored, c.variant);
        Pipeline pl;
        try {
          SolveOptions opt;
          opt.weighted = weighted;
          pl = run_pipeline(g, c.variant, opt);
        } catch (const std::exception& e) {
          run.optimum.miss(at + ": " + e.what());
          continue;
        }
        if (!pl.detection.subgraphs.empty()) ++run.with_forbidden;
        if (pl.result.stats.dense > 0) ++run.with_dense;
        if (pl.result.stats.skipped_dense > 0) ++run.with_skipped_dense;
        if (!pl.result.diagnostics.empty()) ++run.with_repairs;
        const auto& r = pl.result;
        Certificate cert = verify_solution(scored, pl.detection, r.tmatching);
        if (!cert.ok) run.optimum.miss(at + ": " + cert.violation);
        if (!same(r.weight, best.weight))
          run.optimum.miss(at + ": weight " + format_doubled(r.weight) + " vs oracle " + format_doubled(best.weight));
        Weight total = scored.total_weight();
        if (!same(pl.lb.weight, r.co_weight) || !same(r.co_weight, total - best.weight))
          run.sandwich.miss(at + ": lb " + format_doubled(pl.lb.weight) + " co " + format_doubled(r.co_weight) +
                            " oracle co " + format_doubled(total - best.weight));
        if (!weighted) {
          long long lhs = pl.lb.size() - pl.lb.weight / 2;
          long long rhs = formula_by_hand(pl.aux, pl.detection);
          if (pl.lb.weight % 2 != 0 || lhs != rhs)
            run.identity.miss(at + ": |M'|-w'(M') = " + std::to_string(lhs) + " vs " + std::to_string(rhs));
        }
      }
    }
  }
  return run;
}

Outcome criterion_detection() {
  Outcome out;
  int compared = 0;
  for (const auto& c : small_configs()) {
    for (int s = 0; s < kDetectGraphs; ++s) {
      std::uint64_t seed = 7777ULL * s + 3;
      Graph g = small_instance(c, seed, kMaxDetectN, false);
      Detection det = detect(g, c.variant);
      auto expect = keys(brute_force_subgraphs(g, c.variant));
      auto found = keys(det.subgraphs);
      ++compared;
      if (expect != found)
        out.miss(c.name + " seed " + std::to_string(seed) + ": found " + std::to_string(found.size()) + " expected " +
                 std::to_string(expect.size()));
      if (!problematic_disjoint(det)) out.miss(c.name + " seed " + std::to_string(seed) + ": problematic overlap");
    }
  }
  out.detail = std::to_string(compared) + " graphs" + (out.detail.empty() ? "" : ": " + out.detail);
  return out;
}

Outcome criterion_lb() {
  Outcome out;
  int feasible = 0;
  for (int s = 0; s < kLbInstances; ++s) {
    std::uint64_t seed = 99991ULL * s + 5;
    auto [g, cap] = random_lb(seed);
    LbOptimum best = brute_force_lb(g, cap);
    std::string at = "lb seed " + std::to_string(seed);
    LbStats st;
    bool solved = true;
    LbMatching mw;
    try {
      mw = solve_min_weight_lb(g, cap, &st);
    } catch (const Error& e) {
      solved = false;
      if (e.kind() != ErrorKind::Infeasible) out.miss(at + ": " + e.what());
    }
    if (solved != best.feasible) {
      out.miss(at + ": feasibility disagrees");
      continue;
    }
    if (!solved) continue;
    ++feasible;
    if (!is_lb_matching(g, cap, mw.edges)) out.miss(at + ": not an (l,b)-matching");
    if (!st.certificate_ok) out.miss(at + ": dual certificate rejected");
    if (!same(mw.weight, best.min_weight) || mw.size() != best.edges_at_min_weight)
      out.miss(at + ": weight/size " + std::to_string(mw.weight) + "/" + std::to_string(mw.size()) + " vs " +
               std::to_string(best.min_weight) + "/" + std::to_string(best.edges_at_min_weight));
    LbMatching mc = solve_min_cardinality_lb(g, cap);
    if (!is_lb_matching(g, cap, mc.edges) || mc.size() != best.min_cardinality)
      out.miss(at + ": cardinality " + std::to_string(mc.size()) + " vs " + std::to_string(best.min_cardinality));
  }
  out.detail = std::to_string(kLbInstances) + " instances, " + std::to_string(feasible) + " feasible" +
               (out.detail.empty() ? "" : ": " + out.detail);
  return out;
}

Outcome criterion_capped() {
  Outcome out;
  int checked = 0;
  for (int s = 0; s < kLbInstances; ++s) {
    std::uint64_t seed = 99991ULL * s + 5;
    auto [g, cap] = random_lb(seed);
    LbOptimum best = brute_force_lb(g, cap);
    if (!best.feasible) continue;
    ++checked;
    std::string at = "lb seed " + std::to_string(seed);
    LbMatching start = solve_min_weight_lb(g, cap);
    LbStats su, sc;
    LbMatching un = solve_min_cardinality_lb(g, cap, &su);
    LbMatching ca = solve_min_cardinality_capped(g, cap, start, &sc);
    if (!is_lb_matching(g, cap, ca.edges)) out.miss(at + ": capped result infeasible");
    if (un.size() != best.min_cardinality || ca.size() != best.min_cardinality)
      out.miss(at + ": capped " + std::to_string(ca.size()) + " uncapped " + std::to_string(un.size()) + " brute " +
               std::to_string(best.min_cardinality));
    if (su.aux_size != su.sum_b - un.size() || sc.aux_size != sc.sum_b - ca.size())
      out.miss(at + ": |M*| != sum b - |M|");
  }
  out.detail = std::to_string(checked) + " feasible instances" + (out.detail.empty() ? "" : ": " + out.detail);
  return out;
}

// Builds a lone forbidden subgraph with random doubled potentials s.
struct Planted {
  Graph g;
  Variant variant;
  std::vector<Weight> s;
};

Planted plant_alone(int which, Rng& rng) {
  Planted pl;
  Graph shape;
  switch (which) {
    case 0: shape = graph_from(4, 3, complete(4)); pl.variant = Variant::restricted(); break;
    case 1: shape = graph_from(6, 3, complete_bipartite(3, 3)); pl.variant = Variant::restricted(); break;
    case 2: shape = graph_from(6, 4, octahedron()); pl.variant = Variant::kpq(3, 2); break;
    case 3: shape = graph_from(8, 4, complete_bipartite(4, 4)); pl.variant = Variant::restricted(); break;
    default: {
      shape = Graph(9, 6);
      plant_forbidden(shape, PlantSpec{PlantKind::Partite, 3, 3, 0}, 1, rng.next());
      pl.variant = Variant::kpq(3, 3);
    }
  }
  pl.g = shape;
  Weight parity = static_cast<Weight>(rng.below(2));
  pl.s.resize(pl.g.n());
  for (auto& x : pl.s) x = 2 * rng.range(0, 9) + parity;
  for (EdgeId e = 0; e < pl.g.m(); ++e) {
    const auto& ed = pl.g.edge(e);
    pl.g.set_weight(e, (pl.s[ed.u] + pl.s[ed.v]) / 2);
  }
  return pl;
}

int run_cli_exit(const std::string& args) {
  std::string cmd = "\"" + cli_path + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome criterion_potentials() {
  Outcome out;
  Rng rng(424242);
  for (int trial = 0; trial < kPotentialTrials; ++trial) {
    int which = trial % 5;
    Planted pl = plant_alone(which, rng);
    Detection det = detect(pl.g, pl.variant);
    std::string at = "trial " + std::to_string(trial);
    if (det.subgraphs.empty()) {
      out.miss(at + ": nothing detected");
      continue;
    }
    for (const auto& h : det.subgraphs) {
      if (h.absorbed()) continue;
      ExtractOptions eo;
      eo.delta = 2 * rng.range(-3, 3);
      auto pf = extract_potential(pl.g, h, eo);
      if (!pf || !verify_vertex_induced(pl.g, h, *pf)) {
        out.miss(at + ": extraction failed on " + h.key());
        continue;
      }
      for (EdgeId e : subgraph_edges(pl.g, h)) {
        const auto& ed = pl.g.edge(e);
        if (pf->at(ed.u) + pf->at(ed.v) != ed.w) out.miss(at + ": edge identity broken");
      }
      if (h.kind == Kind::Ktt) {
        Weight shift = pf->at(h.classes[0][0]) - pl.s[h.classes[0][0]];
        for (int side = 0; side < 2; ++side)
          for (Vertex v : h.classes[side])
            if (pf->at(v) - pl.s[v] != (side == 0 ? shift : -shift)) out.miss(at + ": K_{t,t} shift not constant");
      } else {
        for (Vertex v : h.vertices)
          if (pf->at(v) != pl.s[v]) out.miss(at + ": potential not recovered on " + h.key());
      }
    }
    Graph bad = pl.g;
    EdgeId e = static_cast<EdgeId>(rng.below(bad.m()));
    bad.set_weight(e, bad.edge(e).w / 2 + 1);
    try {
      solve(bad, pl.variant);
      out.miss(at + ": perturbed weights accepted");
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotVertexInduced) out.miss(at + ": wrong error " + err.what());
    }
    if (which == 1 && !cli_path.empty() && trial < 10) {
      std::string path = "acceptance_perturbed_" + std::to_string(trial) + ".txt";
      {
        std::ofstream os(path);
        write_instance(os, bad, pl.variant, true);
      }
      int code = run_cli_exit("solve " + path);
      std::remove(path.c_str());
      if (code != 4) out.miss(at + ": cli exit " + std::to_string(code) + " instead of 4");
    }
  }
  if (cli_path.empty()) out.miss("cli path not given, exit code unchecked");
  out.detail = std::to_string(kPotentialTrials) + " planted subgraphs" + (out.detail.empty() ? "" : ": " + out.detail);
  return out;
}

Outcome criterion_golden() {
  Outcome out;
  std::ifstream list(golden_dir + "/expected.txt");
  if (!list) {
    out.miss("missing " + golden_dir + "/expected.txt");
    return out;
  }
  std::string line;
  int count = 0;
  while (std::getline(list, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string file;
    long long expect_doubled = 0;
    ss >> file >> expect_doubled;
    ++count;
    Instance inst = parse_instance_file(golden_dir + "/" + file);
    SolveOptions opt;
    opt.weighted = inst.weighted;
    for (bool capped : {true, false}) {
      opt.capped = capped;
      SolveResult r = solve(inst.graph, inst.variant, opt);
      if (r.weight != expect_doubled)
        out.miss(file + ": " + format_doubled(r.weight) + " vs " + format_doubled(expect_doubled));
    }
  }
  out.detail = std::to_string(count) + " instances" + (out.detail.empty() ? "" : ": " + out.detail);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph scale_graph(int n, int t, int cliques, int bicliques, double avg_degree, std::uint64_t seed) {
  Graph g(n, t);
  plant_forbidden(g, PlantSpec{PlantKind::Clique, 0, 0, 0}, cliques, seed);
  plant_forbidden(g, PlantSpec{PlantKind::Biclique, 0, 0, 0}, bicliques, seed + 1);
  add_random_edges(g, avg_degree / (n - 1), seed + 2);
  return g;
}

Outcome criterion_scale() {
  Outcome out;
  const Variant v = Variant::restricted();
  std::ostringstream info;
  info.setf(std::ios::fixed);
  info.precision(2);

  Graph gw = scale_graph(kWeightedScaleN, 3, 25, 25, 2.5, 11);
  WeightSpec ws;
  ws.potential_lo = 0;
  ws.potential_hi = 50;
  ws.noise_hi = 100;
  vertex_induced_weights(gw, find_all_forbidden(gw, v).subgraphs, ws, 12);
  auto t0 = std::chrono::steady_clock::now();
  Pipeline pw = run_pipeline(gw, v);
  double tw = seconds_since(t0);
  info << "weighted n=" << gw.n() << " m=" << gw.m() << " problematic=" << pw.result.stats.problematic << " " << tw
       << "s";
  if (tw > kWeightedScaleSeconds) out.miss("weighted run too slow");

  Graph gu = scale_graph(kUnweightedScaleN, 3, 250, 250, 2.5, 21);
  SolveOptions uo;
  uo.weighted = false;
  t0 = std::chrono::steady_clock::now();
  Pipeline pu = run_pipeline(gu, v, uo);
  double tu = seconds_since(t0);
  info << "; unweighted n=" << gu.n() << " m=" << gu.m() << " " << tu << "s";
  if (tu > kUnweightedScaleSeconds) out.miss("unweighted run too slow");

  double worst = 0;
  for (int n : {5000, 10000, 20000}) {
    Graph a = scale_graph(n, 3, n / 80, n / 80, 2.5, 31 + n);
    Graph b = scale_graph(2 * n, 3, n / 40, n / 40, 2.5, 37 + n);
    double pa = static_cast<double>(detect(a, v).stats.probes);
    double pb = static_cast<double>(detect(b, v).stats.probes);
    double ratio = (pb / b.m()) / (pa / a.m()) * 2.0;
    worst = std::max(worst, ratio);
  }
  info << "; worst probe growth on doubling m " << worst;
  if (worst > kProbeGrowthLimit) out.miss("probe growth above limit");
  out.detail = info.str() + (out.detail.empty() ? "" : ": " + out.detail);
  return out;
}

void report(int id, const std::string& name, const Outcome& o, int& failed) {
  std::cout << "criterion " << id << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL");
  if (o.failures > 0) std::cout << " (" << o.failures << " failures)";
  if (!o.detail.empty()) std::cout << " " << o.detail;
  std::cout << std::endl;
  if (!o.pass) ++failed;
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Outcome o;
    o.miss(std::string("exception: ") + e.what());
    return o;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  golden_dir = argc > 2 ? argv[2] : "golden";
  int failed = 0;

  SmallRun small;
  try {
    small = run_small();
  } catch (const std::exception& e) {
    small.optimum.miss(std::string("exception: ") + e.what());
  }
  std::string counts = std::to_string(small.instances) + " instances, " + std::to_string(small.with_forbidden) +
                       " with forbidden subgraphs, " + std::to_string(small.with_dense) + " with dense, " +
                       std::to_string(small.with_skipped_dense) + " with skipped dense, " +
                       std::to_string(small.with_repairs) + " with repairs";
  small.optimum.detail = counts + (small.optimum.detail.empty() ? "" : ": " + small.optimum.detail);
  report(1, "optimum matches exhaustive search", small.optimum, failed);
  report(2, "detection matches enumeration", guarded(criterion_detection), failed);
  report(3, "(l,b) weight equals removed weight", small.sandwich, failed);
  report(4, "unit-weight count identity", small.identity, failed);
  report(5, "(l,b)-matching solver", guarded(criterion_lb), failed);
  report(6, "capped cardinality solver", guarded(criterion_capped), failed);
  report(7, "potential round trip", guarded(criterion_potentials), failed);
  report(8, "golden instances", guarded(criterion_golden), failed);
  report(9, "scale", guarded(criterion_scale), failed);
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
