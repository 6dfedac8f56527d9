#include "copath/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace copath::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 0, "path needs n >= 0");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph clique(int n) {
  require(n >= 0, "clique needs n >= 0");
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

Graph gnm(int n, int m, std::uint64_t seed) {
  require(n >= 0 && m >= 0, "gnm needs non-negative n and m");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  require(m <= max_edges, "gnm: m exceeds n(n-1)/2");
  std::mt19937_64 rng(seed);
  Graph g(n);
  if (2LL * m > max_edges) {
    // Dense: pick from the full edge list.
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    }
    std::shuffle(all.begin(), all.end(), rng);
    for (int i = 0; i < m; ++i) g.add_edge(all[static_cast<std::size_t>(i)].u, all[static_cast<std::size_t>(i)].v);
    return g;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.edge_count() < m) {
    const int a = pick(rng), b = pick(rng);
    if (a != b && !g.adjacent(a, b)) g.add_edge(a, b);
  }
  return g;
}

Planted planted(const PlantedOptions& options, std::uint64_t seed) {
  require(options.forest_n >= 1, "planted needs forest_n >= 1");
  require(options.k >= 0, "planted needs k >= 0");
  require(options.max_attach >= 1, "planted needs max_attach >= 1");
  std::mt19937_64 rng(seed);
  const int n = options.forest_n + options.k;
  std::vector<Vertex> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::shuffle(id.begin(), id.end(), rng);

  Graph g(n);
  // Forest: walk the first forest_n ids, cutting into paths at random.
  std::bernoulli_distribution cut(0.15);
  for (int i = 0; i + 1 < options.forest_n; ++i) {
    if (!cut(rng)) g.add_edge(id[static_cast<std::size_t>(i)], id[static_cast<std::size_t>(i + 1)]);
  }
  Planted out;
  std::uniform_int_distribution<int> attach(1, options.max_attach);
  std::uniform_int_distribution<int> target(0, n - 1);
  for (int j = options.forest_n; j < n; ++j) {
    const Vertex x = id[static_cast<std::size_t>(j)];
    out.planted.push_back(x);
    const int want = attach(rng);
    for (int tries = 0; tries < 8 * want && g.degree(x) < want; ++tries) {
      const Vertex y = id[static_cast<std::size_t>(target(rng))];
      if (y != x && !g.adjacent(x, y)) g.add_edge(x, y);
    }
  }
  std::sort(out.planted.begin(), out.planted.end());
  out.graph = std::move(g);
  return out;
}

}  // namespace copath::gen
