#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace copath {

// Vertex ids are stable 0..n-1; deleting a vertex only masks it.
using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class InvalidVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidEdge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  // Size of the id universe, including deleted vertices.
  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int alive_count() const { return alive_count_; }
  int edge_count() const { return edge_count_; }

  bool contains(Vertex v) const {
    return v >= 0 && v < vertex_count() && alive_[static_cast<std::size_t>(v)];
  }
  bool empty() const { return alive_count_ == 0; }

  int degree(Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void delete_vertex(Vertex v);
  void delete_vertices(std::span<const Vertex> s);

  VertexSet vertices() const;
  std::vector<Edge> edges() const;
  int max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void require_alive(Vertex v) const;

  std::vector<VertexSet> adj_;
  std::vector<bool> alive_;
  int alive_count_ = 0;
  int edge_count_ = 0;
};

// G[V \ S] as a fresh value.
Graph delete_vertices(const Graph& g, std::span<const Vertex> s);

std::vector<VertexSet> connected_components(const Graph& g);

// n0(G): number of alive degree-0 vertices.
int isolated_count(const Graph& g);

bool max_degree_at_most(const Graph& g, int d);

// Max degree <= 2 and every component is a tree.
bool is_linear_forest(const Graph& g);

// N[u] subset of N[v].
bool dominates(const Graph& g, Vertex v, Vertex u);

// N(X) = union of N(x) minus X.
VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> x);

// Locator for rule and step preconditions. Each kind reports one witness,
// chosen by lowest vertex ids, or nothing.
enum class StructureKind {
  kHighDegree,             // {v} with d(v) >= 5
  kDominatingDegree4,      // {v, u}: d(v) = 4 dominates u, d(u) >= 3
  kPendantTriangle,        // {u, v, w, x}: triangle with N({u,v,w}) = {x}
  kHeavyTriangle,          // {v, u1, u2}: d(v) = 4, |N({v,u1,u2})| >= 4
  kDegree4Triangle,        // {v, u1, u2}: d(v) = 4 in any triangle
  kDegree4HighNeighbor,    // {v, u}: d(v) = 4, d(u) >= 3, adjacent
  kLowDegreeEdge,          // {u, v}: adjacent, both degree <= 2
  kDegreeTwoPath,          // {v0, ..., vh}: degree-two-path with h >= 4
  kPendantDegreeTwoPath,   // {v0, ..., vh}: d(v0) = 1, h >= 2
  kLongCycleComponent,     // cycle component with >= 7 vertices, in order
  kSmallComponent,         // component with <= 6 vertices
};

struct StructureMatch {
  StructureKind kind;
  std::vector<Vertex> vertices;
};

std::optional<StructureMatch> find_structure(const Graph& g, StructureKind kind);

}  // namespace copath
