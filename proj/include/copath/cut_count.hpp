#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "copath/decomposition.hpp"
#include "copath/graph.hpp"

namespace copath {

using Weight = std::int64_t;

// Random weights for the Isolation Lemma over U = V ∪ E, each in [1, N]
// with N = 3|U|.
struct WeightAssignment {
  std::vector<Weight> vertex_weights;  // indexed by vertex id, 0 for deleted ids
  std::map<Edge, Weight> edge_weights;
  Weight range = 0;  // N

  Weight vertex(Vertex v) const { return vertex_weights.at(static_cast<std::size_t>(v)); }
  Weight edge(Vertex a, Vertex b) const { return edge_weights.at(make_edge(a, b)); }
};

WeightAssignment sample_weights(const Graph& g, std::uint64_t seed);

// Bag labels of the counting DP.
enum class CcLabel : std::uint8_t {
  kDeleted = 0,   // D
  kIsolated = 1,  // R0: degree 0, side V1
  kLeafV1 = 2,    // R1^1: degree 1, side V1
  kLeafV2 = 3,    // R1^2: degree 1, side V2
  kInner = 4,     // R2: degree 2, side no longer tracked
};

// Statistics of a (partial) cc-candidate: a degree-0 vertices, n kept
// vertices, e edges, accumulated weight w and m markers.
struct CandidateStats {
  int a = 0;
  int n = 0;
  int e = 0;
  Weight w = 0;
  int m = 0;

  friend bool operator==(const CandidateStats&, const CandidateStats&) = default;
  friend auto operator<=>(const CandidateStats&, const CandidateStats&) = default;
};

struct CutCountKey {
  std::uint64_t labels = 0;  // base-5 packed CcLabel per bag position
  CandidateStats stats;

  friend bool operator==(const CutCountKey&, const CutCountKey&) = default;
};

struct CutCountKeyHash {
  std::size_t operator()(const CutCountKey& k) const noexcept;
};

// Keys with odd count; even entries are dropped since arithmetic is mod 2.
using ParityTable = std::unordered_set<CutCountKey, CutCountKeyHash>;

struct ParityDpOptions {
  // Drop states that already deleted more than this many vertices.
  std::optional<int> deletion_budget;
};

// Parity of the number of cc-candidates of G for every statistic, read off
// the final (empty-bag) table; all returned keys have labels == 0.
ParityTable parity_dp(const Graph& g, const NiceEventSequence& events, const WeightAssignment& weights,
                      ParityDpOptions options = {});

enum class Decision { kYes, kNo, kUnknown };

// One randomized attempt: yes is always sound, unknown may be a false negative.
Decision decide_cpp_once(const Graph& g, int k, const NiceEventSequence& events, std::uint64_t seed);

// Seed of the i-th repeat derived from the master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct CppDecision {
  Decision answer;  // kYes or kNo
  int repeats_used;
};

// Amplified decision: no false positives, false negatives with probability
// at most (1/3)^repeats on yes-instances.
CppDecision decide_cpp(const Graph& g, int k, const NiceEventSequence& events, int repeats, std::uint64_t seed);

}  // namespace copath
