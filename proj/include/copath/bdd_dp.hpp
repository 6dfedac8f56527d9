#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "copath/decomposition.hpp"
#include "copath/graph.hpp"

namespace copath {

class DpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// d-Bounded-Degree Vertex Deletion over a nice path decomposition.
//
// A table state labels every bag vertex with D (deleted) or R_j (kept, with
// exactly j kept neighbours among the vertices introduced so far). States are
// packed base (d + 2), digit 0 = D and digit j + 1 = R_j, bag position i at
// weight (d + 2)^i. Infeasible states are simply absent.
class BoundedDegreeDp {
 public:
  BoundedDegreeDp(const Graph& g, const NiceEventSequence& events, int d);

  void run();
  bool finished() const { return finished_; }

  // Minimum deletion count; throws DpError before run().
  int min_size() const;

  // An optimal deletion set recovered from predecessor links.
  VertexSet recover_solution() const;

  // Largest number of states held for a single event.
  std::size_t peak_states() const { return peak_states_; }

 private:
  struct Cell {
    int size;
    std::uint64_t pred;
  };
  using Table = std::unordered_map<std::uint64_t, Cell>;

  const Graph& graph_;
  const NiceEventSequence& events_;
  int d_;
  std::uint64_t base_;
  std::vector<std::uint64_t> pow_;
  std::vector<Table> tables_;
  bool finished_ = false;
  std::size_t peak_states_ = 0;
};

struct BddResult {
  int min_size;
  VertexSet witness;
  std::size_t peak_states;
};

BddResult bdd_dp_solve(const Graph& g, const NiceEventSequence& events, int d);

}  // namespace copath
