#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "copath/cut_count.hpp"
#include "copath/graph.hpp"

namespace copath {

// Which deletion problem a solution has to satisfy.
struct Problem {
  enum class Kind { kCoPathCycle, kCoPath, kBoundedDegree };
  Kind kind = Kind::kCoPathCycle;
  int d = 2;  // degree bound; 2 for both packing problems

  static Problem cpcp() { return {Kind::kCoPathCycle, 2}; }
  static Problem cpp() { return {Kind::kCoPath, 2}; }
  static Problem bdd(int d) { return {Kind::kBoundedDegree, d}; }
};

namespace oracle {

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSubsetLimit = 14;
inline constexpr int kCandidateLimit = 7;

// Does G \ S satisfy the problem?
bool verify(const Graph& g, const VertexSet& s, Problem problem);

// Minimum deletion size by enumerating subsets in order of increasing size.
int oracle_min(const Graph& g, Problem problem, int limit = kDefaultSubsetLimit);

// A minimum deletion set, first in enumeration order.
VertexSet oracle_solution(const Graph& g, Problem problem, int limit = kDefaultSubsetLimit);

// Number of marked-cc-solutions (G', M') with the given statistics.
std::uint64_t count_marked_cc_solutions(const Graph& g, const WeightAssignment& w, int n, int e, Weight weight);

// Marked-cc-solutions grouped by (a, n, e, w), a = isolated vertices of G'.
std::map<CandidateStats, std::uint64_t> marked_cc_solution_counts(const Graph& g, const WeightAssignment& w);

// Number of cc-candidates (G', (V1, V2, M')) with the given statistics.
std::uint64_t count_cc_candidates(const Graph& g, const WeightAssignment& w, const CandidateStats& key);

// Every realised cc-candidate statistic with its exact count.
std::map<CandidateStats, std::uint64_t> cc_candidate_counts(const Graph& g, const WeightAssignment& w);

// Does w isolate the family of marked-cc-solutions with at least
// |V| - k kept vertices? Nullopt when the family is empty.
std::optional<bool> isolates_solutions(const Graph& g, const WeightAssignment& w, int k);

struct Recurrence {
  std::vector<int> decrements;
};

// Largest root of 1 - sum x^(-c_i); exactly 1 for single-branch recurrences.
double branching_factor(const Recurrence& r);

// Rounded to four decimals, as factors are usually reported.
double round4(double x);

}  // namespace oracle
}  // namespace copath
