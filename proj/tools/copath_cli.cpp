#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "copath/bdd_dp.hpp"
#include "copath/branching.hpp"
#include "copath/cut_count.hpp"
#include "copath/decomposition.hpp"
#include "copath/generators.hpp"
#include "copath/io.hpp"
#include "copath/oracle.hpp"

using namespace copath;

namespace {

struct RunConfig {
  std::string problem = "cpcp";
  std::optional<int> d;
  std::optional<int> k;
  bool optimize = false;
  std::string mode = "auto";
  std::uint64_t seed = 1;
  int repeats = 10;
  int pw_limit = kDefaultPathwidthLimit;
  std::string decomposition;
  std::string graph_file;
};

struct Record {
  std::optional<bool> answer;
  std::optional<VertexSet> witness;
  std::optional<int> min_size;
  std::uint64_t nodes = 0;
  int width = -1;
  int repeats = 0;
  std::optional<double> failure_bound;
};

std::string join_one_based(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out.empty() ? "-" : out;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, Graph g) : cfg_(cfg), g_(std::move(g)) {}

  Record run() {
    if (cfg_.mode == "oracle") return run_oracle();
    if (cfg_.problem == "bdd") {
      if (cfg_.mode == "branch") throw std::invalid_argument("mode=branch supports cpcp and cpp only");
      return run_dp();
    }
    if (cfg_.mode == "dp") return run_dp();
    return run_branching();
  }

 private:
  Problem problem() const {
    if (cfg_.problem == "cpp") return Problem::cpp();
    if (cfg_.problem == "bdd") return Problem::bdd(*cfg_.d);
    return Problem::cpcp();
  }

  const NiceEventSequence& events() {
    if (!events_) {
      PathDecomposition pd;
      if (!cfg_.decomposition.empty()) {
        std::ifstream in(cfg_.decomposition);
        if (!in) throw std::runtime_error("cannot open " + cfg_.decomposition);
        pd = read_decomposition(in);
      } else {
        pd = best_effort_pd(g_, cfg_.pw_limit);
      }
      events_ = to_nice(g_, pd);
    }
    return *events_;
  }

  Record run_oracle() {
    Record r;
    const VertexSet sol = oracle::oracle_solution(g_, problem());
    const int best = static_cast<int>(sol.size());
    if (cfg_.optimize) {
      r.answer = true;
      r.min_size = best;
      r.witness = sol;
    } else {
      r.answer = best <= *cfg_.k;
      if (*r.answer) r.witness = sol;
    }
    return r;
  }

  Record run_dp() {
    Record r;
    r.width = events().width;
    if (problem().kind == Problem::Kind::kCoPath) {
      auto decide = [&](int k) {
        const CppDecision d = decide_cpp(g_, k, events(), cfg_.repeats, derive_seed(cfg_.seed, calls_++));
        r.repeats += d.repeats_used;
        return d.answer == Decision::kYes;
      };
      decide_or_optimize(r, decide);
      return r;
    }
    const BddResult res = bdd_dp_solve(g_, events(), problem().d);
    r.nodes = res.peak_states;
    if (cfg_.optimize) {
      r.answer = true;
      r.min_size = res.min_size;
      r.witness = res.witness;
    } else {
      r.answer = res.min_size <= *cfg_.k;
      if (*r.answer) r.witness = res.witness;
    }
    return r;
  }

  Record run_branching() {
    Record r;
    SolverOptions opts;
    opts.pw_limit = cfg_.pw_limit;
    opts.repeats = cfg_.repeats;
    opts.leaf_dp = cfg_.mode != "branch";
    const bool cpp = cfg_.problem == "cpp";
    std::optional<VertexSet> witness;
    auto decide = [&](int k) {
      opts.seed = derive_seed(cfg_.seed, calls_++);
      const SolveOutcome out = cpp ? solve_cpp(g_, k, opts) : solve_cpcp(g_, k, opts);
      r.nodes += out.stats.nodes;
      r.width = std::max(r.width, out.stats.max_width);
      r.repeats += out.stats.repeats_used;
      if (out.yes) witness = out.witness;
      return out.yes;
    };
    decide_or_optimize(r, decide);
    if (*r.answer && witness) r.witness = witness;
    return r;
  }

  // Binary search over k in [0, n] for optimisation runs; the last yes call
  // is the minimum, since the answer is monotone in k.
  template <typename Decide>
  void decide_or_optimize(Record& r, Decide&& decide) {
    if (!cfg_.optimize) {
      r.answer = decide(*cfg_.k);
    } else {
      int lo = 0, hi = g_.alive_count();
      while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (decide(mid)) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      r.answer = true;
      r.min_size = lo;
      // The witness must belong to k = lo, which may not have been the last call.
      if (cfg_.problem != "cpp") decide(lo);
    }
    if (cfg_.problem == "cpp") r.failure_bound = static_cast<double>(calls_) * std::pow(1.0 / 3.0, cfg_.repeats);
  }

  RunConfig cfg_;
  Graph g_;
  std::optional<NiceEventSequence> events_;
  std::uint64_t calls_ = 0;
};

void print_record(const Record& r, double elapsed) {
  std::ostringstream out;
  out << "answer=" << (*r.answer ? "yes" : "no");
  if (r.witness) out << " witness=" << join_one_based(*r.witness);
  if (r.min_size) out << " min_size=" << *r.min_size;
  out << " nodes=" << r.nodes << " width=" << r.width << " repeats=" << r.repeats;
  if (r.failure_bound) out << " failure_bound=" << std::setprecision(3) << *r.failure_bound;
  out << " elapsed=" << std::fixed << std::setprecision(6) << elapsed;
  std::cout << out.str() << '\n';
}

int command_solve(const RunConfig& cfg) {
  if (cfg.repeats < 1) throw std::invalid_argument("--repeats must be at least 1");
  if ((cfg.problem == "bdd") != cfg.d.has_value()) throw std::invalid_argument("--d is required exactly for bdd");
  if (cfg.d && *cfg.d < 0) throw std::invalid_argument("--d must be non-negative");
  if (cfg.optimize == cfg.k.has_value()) throw std::invalid_argument("give exactly one of -k and --optimize");
  if (cfg.k && *cfg.k < 0) throw std::invalid_argument("-k must be non-negative");
  Graph g = read_graph_file(cfg.graph_file);
  const auto start = std::chrono::steady_clock::now();
  Runner runner(cfg, std::move(g));
  const Record r = runner.run();
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  print_record(r, elapsed);
  return *r.answer ? 0 : 1;
}

struct GenConfig {
  std::string kind;
  std::vector<int> params;
  std::uint64_t seed = 1;
  int forest_n = 12;
  int k = 3;
  int max_attach = 4;
};

int command_gen(const GenConfig& cfg) {
  auto need = [&](std::size_t count) {
    if (cfg.params.size() != count) {
      throw std::invalid_argument("gen " + cfg.kind + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  Graph g;
  if (cfg.kind == "path") {
    need(1);
    g = gen::path(cfg.params[0]);
  } else if (cfg.kind == "cycle") {
    need(1);
    g = gen::cycle(cfg.params[0]);
  } else if (cfg.kind == "clique") {
    need(1);
    g = gen::clique(cfg.params[0]);
  } else if (cfg.kind == "grid") {
    need(2);
    g = gen::grid(cfg.params[0], cfg.params[1]);
  } else if (cfg.kind == "gnm") {
    need(2);
    g = gen::gnm(cfg.params[0], cfg.params[1], cfg.seed);
  } else if (cfg.kind == "planted") {
    need(0);
    const gen::Planted p = gen::planted({cfg.forest_n, cfg.k, cfg.max_attach}, cfg.seed);
    std::cout << "c planted_k " << p.planted.size() << '\n';
    g = p.graph;
  } else {
    throw std::invalid_argument("unknown generator " + cfg.kind);
  }
  write_graph(std::cout, g);
  return 0;
}

int command_factors() {
  std::cout << std::left << std::setw(18) << "step" << std::setw(10) << "factor" << std::setw(10) << "reference"
            << "delta\n";
  for (const FactorRow& row : factor_table()) {
    const double f = oracle::round4(oracle::branching_factor({row.decrements}));
    std::cout << std::setw(18) << row.name << std::setw(10) << std::fixed << std::setprecision(4) << f
              << std::setw(10) << row.reference << std::showpos << f - row.reference << std::noshowpos << '\n';
  }
  return 0;
}

struct BenchConfig {
  std::string problem = "cpcp";
  int n = 30;
  int m = 45;
  int count = 10;
  std::uint64_t seed = 1;
};

// One record per random G(n, m) instance with the optimum size.
int command_bench(const BenchConfig& cfg) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t s = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    const Graph g = gen::gnm(cfg.n, cfg.m, s);
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t nodes = 0;
    int k = 0;
    for (;; ++k) {
      SolverOptions opts;
      opts.seed = s;
      const SolveOutcome out = cfg.problem == "cpp" ? solve_cpp(g, k, opts) : solve_cpcp(g, k, opts);
      nodes += out.stats.nodes;
      if (out.yes) break;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "instance=" << i << " n=" << cfg.n << " m=" << cfg.m << " seed=" << s << " min_size=" << k
              << " nodes=" << nodes << " elapsed=" << std::fixed << std::setprecision(6) << elapsed << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deletion to paths and cycles: exact solvers and tools"};
  app.require_subcommand(1);

  RunConfig run;
  auto* solve = app.add_subcommand("solve", "decide or optimise one instance");
  solve->add_option("--problem", run.problem)->check(CLI::IsMember({"cpcp", "cpp", "bdd"}));
  solve->add_option("--d", run.d, "degree bound (bdd only)");
  auto* k_opt = solve->add_option("-k", run.k, "deletion budget");
  solve->add_flag("--optimize", run.optimize, "find the minimum budget")->excludes(k_opt);
  solve->add_option("--mode", run.mode)->check(CLI::IsMember({"auto", "branch", "dp", "oracle"}));
  solve->add_option("--seed", run.seed);
  solve->add_option("--repeats", run.repeats)->capture_default_str();
  solve->add_option("--pw-limit", run.pw_limit)->capture_default_str();
  solve->add_option("--decomposition", run.decomposition, "path decomposition file to use instead of the decomposer");
  solve->add_option("graph", run.graph_file)->required();

  GenConfig gen_cfg;
  auto* gen_cmd = app.add_subcommand("gen", "print a generated graph");
  gen_cmd->add_option("kind", gen_cfg.kind)->required()->check(
      CLI::IsMember({"path", "cycle", "clique", "grid", "gnm", "planted"}));
  gen_cmd->add_option("params", gen_cfg.params);
  gen_cmd->add_option("--seed", gen_cfg.seed);
  gen_cmd->add_option("--forest-n", gen_cfg.forest_n);
  gen_cmd->add_option("--k", gen_cfg.k);
  gen_cmd->add_option("--max-attach", gen_cfg.max_attach);

  auto* factors = app.add_subcommand("factors", "branching factors of every step");

  BenchConfig bench_cfg;
  auto* bench = app.add_subcommand("bench", "solve a batch of random instances");
  bench->add_option("--problem", bench_cfg.problem)->check(CLI::IsMember({"cpcp", "cpp"}));
  bench->add_option("--n", bench_cfg.n);
  bench->add_option("--m", bench_cfg.m);
  bench->add_option("--count", bench_cfg.count);
  bench->add_option("--seed", bench_cfg.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return command_solve(run);
    if (*gen_cmd) return command_gen(gen_cfg);
    if (*factors) return command_factors();
    if (*bench) return command_bench(bench_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
