#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "copath/graph.hpp"

namespace copath {

using Bag = VertexSet;

struct PathDecomposition {
  std::vector<Bag> bags;

  // max |bag| - 1; -1 for an empty decomposition.
  int width() const;
};

enum class PdProperty { kCoverage, kEdgeCoverage, kContiguity };

struct PdViolation {
  PdProperty property;
  std::vector<Vertex> witness;  // offending vertex, or the two ends of an edge
  std::string message;
};

// Checks (P1) vertex coverage, (P2) edge coverage and (P3) contiguity.
std::optional<PdViolation> validate(const Graph& g, const PathDecomposition& pd);

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NiceEvent {
  enum class Kind { kIntroduce, kForget };
  Kind kind;
  Vertex v;

  friend bool operator==(const NiceEvent&, const NiceEvent&) = default;
};

struct NiceEventSequence {
  std::vector<NiceEvent> events;
  int width = -1;
};

// Introduce/forget form of a valid decomposition with identical width.
// Throws DecompositionError if pd does not validate for g.
NiceEventSequence to_nice(const Graph& g, const PathDecomposition& pd);

// Replays events into the bag sequence they walk through (empty bags elided).
PathDecomposition replay(const NiceEventSequence& seq);

// Throws DecompositionError unless seq starts and ends empty, never
// introduces a vertex twice and never forgets an absent vertex.
void check_events(const NiceEventSequence& seq);

// Drops bags contained in a neighbouring bag, so r <= number of vertices.
PathDecomposition normalize(PathDecomposition pd);

// Decomposition induced by a linear layout: bag i holds the i-th vertex and
// every earlier vertex that still has a neighbour at position >= i.
PathDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

struct PathwidthResult {
  int width;
  PathDecomposition decomposition;
};

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultPathwidthLimit = 22;

// Exact pathwidth via vertex separation number, subset DP over 2^n layouts
// prefixes. The lexicographically smallest optimal layout is returned.
PathwidthResult exact_pathwidth(const Graph& g, int limit = kDefaultPathwidthLimit);

// Greedy layout heuristic: always append the vertex that keeps the boundary
// smallest. Valid for any graph, no width guarantee.
PathDecomposition heuristic_pd(const Graph& g);

// Exact when the graph is small enough, heuristic otherwise.
PathDecomposition best_effort_pd(const Graph& g, int limit = kDefaultPathwidthLimit);

struct GuardReport {
  int n3 = 0;
  int n4 = 0;
  int n_ge5 = 0;
  bool vertex_bound_ok = false;  // |V| <= 100k
  bool weight_bound_ok = false;  // n3/6 + n4/3 <= 2k/3

  bool ok() const { return vertex_bound_ok && weight_bound_ok; }
};

// Necessary conditions for a proper graph to have a solution of size <= k.
GuardReport guard_check(const Graph& g, int k);

struct ProperReport {
  bool max_degree_ok = true;
  bool degree4_neighbors_ok = true;
  bool degree2_support_ok = true;
  bool component_size_ok = true;

  bool ok() const { return max_degree_ok && degree4_neighbors_ok && degree2_support_ok && component_size_ok; }
};

// The four structural conditions the guard and the leaf DPs rely on.
ProperReport check_proper(const Graph& g);
inline bool is_proper(const Graph& g) { return check_proper(g).ok(); }

// Text format: `p pd <n_bags> <max_bag_size> <n_vertices>` then one
// `b <index> <v1> <v2> ...` line per bag; vertices and indices are 1-based.
void write_decomposition(std::ostream& out, const PathDecomposition& pd, int vertex_count);
PathDecomposition read_decomposition(std::istream& in);

}  // namespace copath
