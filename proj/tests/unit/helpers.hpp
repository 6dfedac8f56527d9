#pragma once

#include <initializer_list>
#include <vector>

#include "copath/graph.hpp"

namespace testing {

inline copath::Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  copath::Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline copath::Graph star(int leaves) {
  copath::Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace testing
