// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "copath/bdd_dp.hpp"
#include "copath/branching.hpp"
#include "copath/cut_count.hpp"
#include "copath/decomposition.hpp"
#include "copath/generators.hpp"
#include "copath/oracle.hpp"

using namespace copath;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

Graph random_graph(std::mt19937_64& rng, int n_lo, int n_hi, int index) {
  static const double kDensities[] = {0.15, 0.3, 0.45, 0.6, 0.75, 0.9};
  const int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
  const double p = kDensities[index % 6];
  const int m = static_cast<int>(std::lround(p * n * (n - 1) / 2));
  return gen::gnm(n, m, rng());
}

std::vector<Graph> equivalence_set() {
  std::mt19937_64 rng(20240601);
  std::vector<Graph> out;
  for (int i = 0; i < 2000; ++i) out.push_back(random_graph(rng, 4, 9, i));
  return out;
}

std::vector<Graph> parity_set() {
  std::mt19937_64 rng(777);
  std::vector<Graph> out;
  for (int i = 0; i < 300; ++i) out.push_back(random_graph(rng, 4, 6, i));
  return out;
}

NiceEventSequence nice_of(const Graph& g) { return to_nice(g, best_effort_pd(g)); }

Result oracle_equivalence_cpcp(const std::vector<Graph>& graphs) {
  int mismatches = 0, bad_witness = 0, checks = 0;
  for (const Graph& g : graphs) {
    const int best = oracle::oracle_min(g, Problem::cpcp());
    for (int k = 0; k <= g.alive_count(); ++k) {
      const SolveOutcome out = solve_cpcp(g, k);
      ++checks;
      if (out.yes != (best <= k)) ++mismatches;
      if (out.yes && (!out.witness || static_cast<int>(out.witness->size()) > k ||
                      !oracle::verify(g, *out.witness, Problem::cpcp()))) {
        ++bad_witness;
      }
    }
  }
  return {mismatches == 0 && bad_witness == 0, std::to_string(checks) + " decisions, " + std::to_string(mismatches) +
                                                   " mismatches, " + std::to_string(bad_witness) + " bad witnesses"};
}

Result oracle_equivalence_cpp(const std::vector<Graph>& graphs) {
  int false_pos = 0, false_neg = 0, checks = 0;
  std::uint64_t idx = 0;
  std::string captured;
  for (const Graph& g : graphs) {
    const int best = oracle::oracle_min(g, Problem::cpp());
    for (int k = 0; k <= g.alive_count(); ++k, ++idx) {
      SolverOptions opts;
      opts.repeats = 12;
      opts.seed = derive_seed(99, idx);
      const SolveOutcome out = solve_cpp(g, k, opts);
      ++checks;
      if (out.yes && best > k) ++false_pos;
      if (!out.yes && best <= k) {
        ++false_neg;
        if (captured.empty()) captured = " first failure seed=" + std::to_string(opts.seed);
      }
    }
  }
  return {false_pos == 0 && false_neg == 0, std::to_string(checks) + " decisions, " + std::to_string(false_pos) +
                                                " false positives, " + std::to_string(false_neg) +
                                                " false negatives" + captured};
}

Result parity_identity(const std::vector<Graph>& graphs) {
  int compared = 0, differing = 0;
  std::uint64_t seed = 0;
  for (const Graph& g : graphs) {
    for (int s = 0; s < 3; ++s) {
      const WeightAssignment w = sample_weights(g, ++seed);
      const auto sols = oracle::marked_cc_solution_counts(g, w);
      const auto cands = oracle::cc_candidate_counts(g, w);
      std::set<CandidateStats> keys;
      for (const auto& [k, c] : sols) keys.insert(k);
      for (const auto& [k, c] : cands) keys.insert(k);
      for (const CandidateStats& k : keys) {
        if (k.m != k.n - k.e - k.a) continue;
        const auto a = sols.find(k);
        const auto b = cands.find(k);
        const std::uint64_t pa = a == sols.end() ? 0 : a->second % 2;
        const std::uint64_t pb = b == cands.end() ? 0 : b->second % 2;
        ++compared;
        if (pa != pb) ++differing;
      }
    }
  }
  return {differing == 0 && compared > 0,
          std::to_string(compared) + " keys compared, " + std::to_string(differing) + " parity differences"};
}

Result parity_dp_vs_oracle(const std::vector<Graph>& graphs) {
  int tables = 0, differing = 0;
  std::uint64_t seed = 0;
  for (const Graph& g : graphs) {
    const NiceEventSequence ev = nice_of(g);
    for (int s = 0; s < 3; ++s) {
      const WeightAssignment w = sample_weights(g, ++seed);
      const ParityTable table = parity_dp(g, ev, w);
      std::set<CandidateStats> odd;
      for (const auto& [k, c] : oracle::cc_candidate_counts(g, w)) {
        if (c % 2) odd.insert(k);
      }
      std::set<CandidateStats> dp;
      bool leftover_labels = false;
      for (const CutCountKey& key : table) {
        dp.insert(key.stats);
        leftover_labels |= key.labels != 0;
      }
      ++tables;
      if (dp != odd || leftover_labels) ++differing;
    }
  }
  return {differing == 0, std::to_string(tables) + " tables, " + std::to_string(differing) + " differing"};
}

bool same_bags(const PathDecomposition& a, const PathDecomposition& b) { return a.bags == b.bags; }

Result bdd_vs_oracle() {
  std::mt19937_64 rng(4242);
  int runs = 0, mismatches = 0, bad = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(rng, 2, 8, i);
    std::vector<PathDecomposition> pds;
    auto offer = [&](const PathDecomposition& cand) {
      bool fresh = true;
      for (const auto& pd : pds) fresh &= !same_bags(pd, cand);
      if (fresh && pds.size() < 3) pds.push_back(cand);
    };
    VertexSet all = g.vertices();
    offer(exact_pathwidth(g).decomposition);
    offer(PathDecomposition{{all}});
    for (int tries = 0; pds.size() < 3 && tries < 1000; ++tries) {
      std::shuffle(all.begin(), all.end(), rng);
      offer(decomposition_from_order(g, all));
    }
    // A leading singleton bag gives another valid decomposition.
    for (std::size_t j = 0; pds.size() < 3; ++j) {
      PathDecomposition extra = pds[j];
      extra.bags.insert(extra.bags.begin(), Bag{extra.bags.front().front()});
      offer(extra);
    }
    for (int d = 0; d <= 3; ++d) {
      const int best = oracle::oracle_min(g, Problem::bdd(d));
      for (std::size_t j = 0; j < 3; ++j) {
        const BddResult r = bdd_dp_solve(g, to_nice(g, pds[j]), d);
        ++runs;
        if (r.min_size != best) ++mismatches;
        if (static_cast<int>(r.witness.size()) != r.min_size || !oracle::verify(g, r.witness, Problem::bdd(d))) ++bad;
      }
    }
  }
  return {mismatches == 0 && bad == 0, std::to_string(runs) + " DP runs, " + std::to_string(mismatches) +
                                          " mismatches, " + std::to_string(bad) + " bad witnesses"};
}

Result factor_reproduction() {
  int off = 0;
  std::string worst;
  for (const FactorRow& row : factor_table()) {
    const double f = oracle::round4(oracle::branching_factor({row.decrements}));
    // Compare in units of 1e-4 to keep the tolerance exact.
    const long diff = std::lround(f * 1e4) - std::lround(row.reference * 1e4);
    if (std::abs(diff) > 1) {
      ++off;
      worst += " " + row.name;
    }
  }
  return {off == 0, std::to_string(factor_table().size()) + " rows, " + std::to_string(off) + " outside 1e-4" + worst};
}

// Proper graphs as they arise at the leaves of the cPCP search.
std::vector<Graph> proper_graphs(int count) {
  std::mt19937_64 rng(31337);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(10, 26)(rng);
    const int m = std::uniform_int_distribution<int>(n, 2 * n)(rng);
    Instance inst{gen::gnm(n, m, rng()), n, {}};
    while (true) {
      inst = reduce_cpcp(std::move(inst)).instance;
      auto step = select_cpcp_step(inst.graph);
      if (!step) break;
      const auto& kids = step->branches.children;
      const Branch& b = kids[std::uniform_int_distribution<std::size_t>(0, kids.size() - 1)(rng)];
      inst.graph.delete_vertices(b.remove);
      inst.graph.delete_vertices(b.discard);
    }
    if (!inst.graph.empty() && inst.graph.alive_count() <= 20 && is_proper(inst.graph)) out.push_back(inst.graph);
  }
  return out;
}

Result guard_inequality() {
  const auto graphs = proper_graphs(200);
  int violations = 0, max_n = 0;
  for (const Graph& g : graphs) {
    const int k = oracle::oracle_min(g, Problem::cpcp(), 20);
    max_n = std::max(max_n, g.alive_count());
    if (!guard_check(g, k).ok()) ++violations;
  }
  return {violations == 0, std::to_string(graphs.size()) + " proper graphs (max n " + std::to_string(max_n) + "), " +
                               std::to_string(violations) + " violations"};
}

Result isolation_rate() {
  const Graph g = gen::gnm(7, 10, 3);
  const int k = oracle::oracle_min(g, Problem::cpp());
  const double universe = g.alive_count() + g.edge_count();
  const double range = 3 * universe;
  const double p = 1.0 - universe / range;
  const int samples = 300;
  int isolated = 0;
  for (int i = 0; i < samples; ++i) {
    const auto r = oracle::isolates_solutions(g, sample_weights(g, derive_seed(5, static_cast<std::uint64_t>(i))), k);
    if (r && *r) ++isolated;
  }
  const double rate = static_cast<double>(isolated) / samples;
  const double threshold = p - 3 * std::sqrt(p * (1 - p) / samples);
  char buf[128];
  std::snprintf(buf, sizeof buf, "rate %.3f over %d samples, threshold %.3f (|U|=%d, k=%d)", rate, samples, threshold,
                static_cast<int>(universe), k);
  return {rate >= threshold, buf};
}

struct RuleCase {
  std::string name;
  Problem problem;
  std::function<bool(Instance&)> apply;
  std::function<Graph(std::mt19937_64&, int)> make;
};

Graph with_pendant_triangle(std::mt19937_64& rng, int i) {
  Graph base = random_graph(rng, 3, 6, i);
  const int n = base.vertex_count();
  Graph g(n + 3);
  for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
  const Vertex x = std::uniform_int_distribution<int>(0, n - 1)(rng);
  g.add_edge(n, n + 1);
  g.add_edge(n + 1, n + 2);
  g.add_edge(n, n + 2);
  for (int t = n; t < n + 3; ++t) {
    if (t == n || std::bernoulli_distribution(0.5)(rng)) g.add_edge(t, x);
  }
  return g;
}

// Subdivides random edges so long degree-2 chains appear.
Graph with_chains(std::mt19937_64& rng, int i) {
  Graph base = random_graph(rng, 2, 6, i);
  std::vector<Edge> edges = base.edges();
  int n = base.vertex_count();
  const int extra = 9 - n;
  if (edges.empty() || extra <= 0) return gen::cycle(std::uniform_int_distribution<int>(7, 9)(rng));
  std::vector<Edge> out;
  const std::size_t target = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (j != target) {
      out.push_back(edges[j]);
      continue;
    }
    Vertex prev = edges[j].u;
    for (int s = 0; s < extra; ++s) {
      out.push_back({prev, n});
      prev = n++;
    }
    out.push_back({prev, edges[j].v});
  }
  return Graph::from_edges(n, out);
}

Result reduction_soundness() {
  std::vector<RuleCase> rules{
      {"small component", Problem::cpcp(), [](Instance& x) { return apply_small_component_rule(x, Problem::cpcp()); },
       [](std::mt19937_64& rng, int i) { return random_graph(rng, 4, 9, i); }},
      {"low-degree edge", Problem::cpcp(), [](Instance& x) { return apply_low_degree_edge_rule(x); },
       [](std::mt19937_64& rng, int i) { return random_graph(rng, 4, 9, i); }},
      {"pendant triangle", Problem::cpcp(), [](Instance& x) { return apply_pendant_triangle_rule(x); }, with_pendant_triangle},
      {"degree-two path", Problem::cpp(), [](Instance& x) { return apply_degree_two_path_rule(x); }, with_chains},
  };
  std::mt19937_64 rng(8080);
  bool pass = true;
  std::string detail;
  for (const RuleCase& rule : rules) {
    int fired = 0, differing = 0, attempts = 0;
    while (fired < 300 && attempts < 200000) {
      const Graph g = rule.make(rng, attempts++);
      if (g.alive_count() > 9) continue;
      const int n = g.alive_count();
      Instance inst{g, n, {}};
      if (!rule.apply(inst)) continue;
      ++fired;
      const int before = oracle::oracle_min(g, rule.problem);
      const int after = oracle::oracle_min(inst.graph, rule.problem);
      const int spent = n - inst.budget;
      for (int k = 0; k <= n; ++k) {
        if ((before <= k) != (after <= k - spent)) {
          ++differing;
          break;
        }
      }
    }
    pass &= fired >= 300 && differing == 0;
    detail += rule.name + " " + std::to_string(fired) + " fired/" + std::to_string(differing) + " differ; ";
  }
  return {pass, detail};
}

Result scale_smoke() {
  bool pass = true;
  std::string detail;
  std::uint64_t leaves = 0;
  for (int k = 4; k <= 10; ++k) {
    std::uint64_t worst = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
      const gen::Planted p = gen::planted({3 * k + 10, k, 6}, derive_seed(k, s));
      const SolveOutcome out = solve_cpcp(p.graph, static_cast<int>(p.planted.size()));
      pass &= out.yes;
      worst = std::max(worst, out.stats.nodes);
      leaves += out.stats.dp_leaves;
    }
    pass &= static_cast<double>(worst) < std::pow(3.0, k);
    detail += "k=" + std::to_string(k) + ":" + std::to_string(worst) + " ";
  }
  // Proper graphs reach the leaf DP; without it the solver refuses them.
  const Graph cube = [] {
    Graph g(8);
    for (int v = 0; v < 8; ++v) {
      for (int b = 0; b < 3; ++b) {
        if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
      }
    }
    return g;
  }();
  const SolveOutcome via_dp = solve_cpcp(cube, 2);
  leaves += via_dp.stats.dp_leaves;
  bool refused = false;
  try {
    SolverOptions no_dp;
    no_dp.leaf_dp = false;
    solve_cpcp(cube, 2, no_dp);
  } catch (const std::exception&) {
    refused = true;
  }
  pass &= via_dp.stats.dp_leaves > 0 && refused && via_dp.yes == (oracle::oracle_min(cube, Problem::cpcp()) <= 2);
  detail += "dp_leaves=" + std::to_string(leaves);
  return {pass, detail};
}

}  // namespace

int main() {
  const auto equiv = equivalence_set();
  const auto parity = parity_set();
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {"oracle equivalence cPCP", [&] { return oracle_equivalence_cpcp(equiv); }},
      {"oracle equivalence cPP", [&] { return oracle_equivalence_cpp(equiv); }},
      {"marked-solution vs candidate parity", [&] { return parity_identity(parity); }},
      {"parity DP vs candidate counts", [&] { return parity_dp_vs_oracle(parity); }},
      {"bounded-degree DP vs oracle", bdd_vs_oracle},
      {"branching factors", factor_reproduction},
      {"proper-graph size bounds", guard_inequality},
      {"isolation rate", isolation_rate},
      {"reduction rule soundness", reduction_soundness},
      {"scale smoke test", scale_smoke},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, r.detail.c_str(), secs);
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
