#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "copath/decomposition.hpp"
#include "copath/graph.hpp"
#include "copath/oracle.hpp"

namespace copath {

// Raised when the search reaches a configuration that earlier rules and
// steps exclude. Always a bug, never an answer.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Instance {
  Graph graph;
  int budget = 0;
  VertexSet accumulated;  // committed deletions, original ids
};

struct ReductionStats {
  int small_components = 0;
  int low_degree_edges = 0;
  int pendant_triangles = 0;
  int two_path_contractions = 0;  // includes pendant chains and long cycles

  int total() const { return small_components + low_degree_edges + pendant_triangles + two_path_contractions; }
};

struct ReductionOutcome {
  Instance instance;
  bool exhausted = false;  // budget went negative: a no-instance
  ReductionStats stats;
};

// Single-rule applications; each returns whether the rule fired and never
// lets the budget go negative silently (budget may end below zero).
bool apply_small_component_rule(Instance& inst, Problem problem);
bool apply_low_degree_edge_rule(Instance& inst);
bool apply_pendant_triangle_rule(Instance& inst);
bool apply_degree_two_path_rule(Instance& inst);

// Exhaustive reduction to a fixpoint.
ReductionOutcome reduce_cpcp(Instance inst);
ReductionOutcome reduce_cpp(Instance inst);

struct Branch {
  VertexSet remove;   // deleted and charged to the budget
  VertexSet discard;  // removed uncharged: provably kept as a separate component
  int decrement = 0;  // == remove.size()
};

struct BranchSet {
  std::vector<Branch> children;

  std::vector<int> decrements() const;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (B1): delete v, or keep v with exactly two of its neighbours.
BranchSet branch_b1(const Graph& g, Vertex v);

// (B2): v dominates u; delete v, or keep v and u with one more neighbour.
BranchSet branch_b2(const Graph& g, Vertex v, Vertex u);

enum class Step {
  kStep1,        // degree >= 5
  kStep2,        // degree-4 vertex dominating a degree->=3 vertex
  kStep3,        // degree-4 vertex in a heavy triangle
  kStep4,        // degree-4 vertex in a triangle (cPCP)
  kStep5,        // degree-4 vertex with a degree->=3 neighbour
  kStarStep3,    // degree-4 vertex in a triangle (cPP)
  kStarStep4,    // as kStep5, for cPP
};

std::string to_string(Step s);

struct StepBranching {
  Step step;
  std::string detail;  // sub-case, e.g. "case 2.3"
  BranchSet branches;
};

// First applicable branching step on a reduced graph, or nothing when the
// graph is ready for the leaf dynamic program.
std::optional<StepBranching> select_cpcp_step(const Graph& g);
std::optional<StepBranching> select_cpp_step(const Graph& g);

struct FactorRow {
  std::string name;
  std::vector<int> decrements;
  double reference;  // published value, four decimals
};

// Branching vectors of every step, worst case first within a step.
const std::vector<FactorRow>& factor_table();

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t reductions = 0;
  std::uint64_t dp_leaves = 0;
  std::uint64_t guard_rejections = 0;
  int max_width = -1;
  int repeats_used = 0;
};

struct SolveOutcome {
  bool yes = false;
  std::optional<VertexSet> witness;
  SolveStats stats;
};

struct SolverOptions {
  int pw_limit = kDefaultPathwidthLimit;
  int repeats = 10;        // cut & count repeats per leaf (cPP only)
  std::uint64_t seed = 1;  // master seed (cPP only)
  // When false, a non-empty leaf is an error instead of a DP call.
  bool leaf_dp = true;
};

SolveOutcome solve_cpcp(const Graph& g, int k, const SolverOptions& options = {});
SolveOutcome solve_cpp(const Graph& g, int k, const SolverOptions& options = {});

}  // namespace copath
