#pragma once

#include <cstdint>

#include "copath/graph.hpp"

namespace copath::gen {

Graph path(int n);
Graph cycle(int n);
Graph clique(int n);
Graph grid(int rows, int cols);

// Uniform G(n, m): m distinct edges.
Graph gnm(int n, int m, std::uint64_t seed);

struct PlantedOptions {
  int forest_n = 12;
  int k = 3;
  int max_attach = 4;  // edges from each planted vertex
};

struct Planted {
  Graph graph;
  VertexSet planted;  // deleting these leaves a linear forest
};

// Random linear forest on forest_n vertices plus k extra vertices with up
// to max_attach edges each. Vertex ids are shuffled.
Planted planted(const PlantedOptions& options, std::uint64_t seed);

}  // namespace copath::gen
