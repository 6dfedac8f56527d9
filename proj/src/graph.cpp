#include "copath/graph.hpp"

#include <algorithm>
#include <numeric>

namespace copath {

namespace {

bool sorted_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

void sorted_insert(VertexSet& s, Vertex v) {
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
}

void sorted_erase(VertexSet& s, Vertex v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

}  // namespace

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)), alive_(static_cast<std::size_t>(n), true), alive_count_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::require_alive(Vertex v) const {
  if (!contains(v)) {
    throw InvalidVertex("vertex " + std::to_string(v) + " is out of range or deleted");
  }
}

int Graph::degree(Vertex v) const {
  require_alive(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const VertexSet& Graph::neighbors(Vertex v) const {
  require_alive(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  require_alive(u);
  require_alive(v);
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  return a.size() <= b.size() ? sorted_contains(a, v) : sorted_contains(b, u);
}

void Graph::add_edge(Vertex u, Vertex v) {
  require_alive(u);
  require_alive(v);
  if (u == v) throw InvalidEdge("self-loop on vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw InvalidEdge("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  sorted_insert(adj_[static_cast<std::size_t>(u)], v);
  sorted_insert(adj_[static_cast<std::size_t>(v)], u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) {
    throw InvalidEdge("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  sorted_erase(adj_[static_cast<std::size_t>(u)], v);
  sorted_erase(adj_[static_cast<std::size_t>(v)], u);
  --edge_count_;
}

void Graph::delete_vertex(Vertex v) {
  require_alive(v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  for (Vertex u : nv) sorted_erase(adj_[static_cast<std::size_t>(u)], v);
  edge_count_ -= static_cast<int>(nv.size());
  nv.clear();
  alive_[static_cast<std::size_t>(v)] = false;
  --alive_count_;
}

void Graph::delete_vertices(std::span<const Vertex> s) {
  for (Vertex v : s) require_alive(v);
  for (Vertex v : s) {
    if (contains(v)) delete_vertex(v);
  }
}

VertexSet Graph::vertices() const {
  VertexSet out;
  out.reserve(static_cast<std::size_t>(alive_count_));
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (alive_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex u : adj_[static_cast<std::size_t>(v)]) {
      if (v < u) out.push_back({v, u});
    }
  }
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nv : adj_) best = std::max(best, static_cast<int>(nv.size()));
  return best;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> s) {
  Graph out = g;
  out.delete_vertices(s);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<Vertex> stack;
  for (Vertex s : g.vertices()) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp;
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int isolated_count(const Graph& g) {
  int n0 = 0;
  for (Vertex v : g.vertices()) n0 += g.degree(v) == 0 ? 1 : 0;
  return n0;
}

bool max_degree_at_most(const Graph& g, int d) { return g.max_degree() <= d; }

bool is_linear_forest(const Graph& g) {
  if (!max_degree_at_most(g, 2)) return false;
  for (const VertexSet& comp : connected_components(g)) {
    int twice_edges = 0;
    for (Vertex v : comp) twice_edges += g.degree(v);
    if (twice_edges / 2 != static_cast<int>(comp.size()) - 1) return false;
  }
  return true;
}

bool dominates(const Graph& g, Vertex v, Vertex u) {
  if (u == v) throw InvalidVertex("domination needs two distinct vertices");
  if (!g.adjacent(v, u)) return false;
  const VertexSet& nv = g.neighbors(v);
  for (Vertex w : g.neighbors(u)) {
    if (w != v && !sorted_contains(nv, w)) return false;
  }
  return true;
}

VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> x) {
  VertexSet inside(x.begin(), x.end());
  std::sort(inside.begin(), inside.end());
  VertexSet out;
  for (Vertex v : inside) {
    for (Vertex u : g.neighbors(v)) {
      if (!sorted_contains(inside, u)) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Follows degree-2 vertices from `from` through `next` until a vertex of
// degree != 2 is reached or the walk returns to `stop`.
std::vector<Vertex> walk_degree_two(const Graph& g, Vertex from, Vertex next, Vertex stop) {
  std::vector<Vertex> path{next};
  Vertex prev = from;
  Vertex cur = next;
  while (cur != stop && g.degree(cur) == 2) {
    const VertexSet& nc = g.neighbors(cur);
    Vertex nxt = nc[0] == prev ? nc[1] : nc[0];
    prev = cur;
    cur = nxt;
    path.push_back(cur);
  }
  return path;
}

// Maximal run of degree-2 vertices through s, with its two endpoints.
// Returns an empty vector when s lies on a pure cycle component.
std::vector<Vertex> degree_two_path_through(const Graph& g, Vertex s) {
  const VertexSet& ns = g.neighbors(s);
  std::vector<Vertex> left = walk_degree_two(g, s, ns[0], s);
  if (left.back() == s) return {};
  std::vector<Vertex> right = walk_degree_two(g, s, ns[1], s);
  std::vector<Vertex> path(left.rbegin(), left.rend());
  path.push_back(s);
  path.insert(path.end(), right.begin(), right.end());
  return path;
}

void orient_path(std::vector<Vertex>& path) {
  const Vertex a = path.front();
  const Vertex b = path.back();
  if (a == b) {
    if (path[path.size() - 2] < path[1]) std::reverse(path.begin(), path.end());
  } else if (b < a) {
    std::reverse(path.begin(), path.end());
  }
}

std::optional<StructureMatch> find_two_paths(const Graph& g, StructureKind kind) {
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex s : g.vertices()) {
    if (g.degree(s) != 2 || seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> path = degree_two_path_through(g, s);
    if (path.empty()) {
      seen[static_cast<std::size_t>(s)] = true;
      continue;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) seen[static_cast<std::size_t>(path[i])] = true;
    const std::size_t h = path.size() - 1;
    orient_path(path);
    if (kind == StructureKind::kDegreeTwoPath) {
      if (h >= 4) return StructureMatch{kind, path};
    } else {
      const bool front_leaf = g.degree(path.front()) == 1;
      const bool back_leaf = g.degree(path.back()) == 1;
      if (!front_leaf && back_leaf) std::reverse(path.begin(), path.end());
      if ((front_leaf || back_leaf) && h >= 2) return StructureMatch{kind, path};
    }
  }
  return std::nullopt;
}

std::optional<StructureMatch> find_long_cycle(const Graph& g) {
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() < 7) continue;
    bool all_two = std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == 2; });
    if (!all_two) continue;
    std::vector<Vertex> order{comp.front()};
    Vertex prev = comp.front();
    Vertex cur = g.neighbors(prev)[0];
    while (cur != comp.front()) {
      order.push_back(cur);
      const VertexSet& nc = g.neighbors(cur);
      Vertex nxt = nc[0] == prev ? nc[1] : nc[0];
      prev = cur;
      cur = nxt;
    }
    return StructureMatch{StructureKind::kLongCycleComponent, order};
  }
  return std::nullopt;
}

std::optional<StructureMatch> find_triangle(const Graph& g, StructureKind kind) {
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 4) continue;
    const VertexSet& nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        if (!g.adjacent(nv[i], nv[j])) continue;
        if (kind == StructureKind::kDegree4Triangle) return StructureMatch{kind, {v, nv[i], nv[j]}};
        const Vertex tri[] = {v, nv[i], nv[j]};
        if (open_neighborhood(g, tri).size() >= 4) return StructureMatch{kind, {v, nv[i], nv[j]}};
      }
    }
  }
  return std::nullopt;
}

std::optional<StructureMatch> find_pendant_triangle(const Graph& g) {
  for (Vertex u : g.vertices()) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !g.adjacent(u, w)) continue;
        const Vertex tri[] = {u, v, w};
        VertexSet outside = open_neighborhood(g, tri);
        if (outside.size() == 1) return StructureMatch{StructureKind::kPendantTriangle, {u, v, w, outside[0]}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<StructureMatch> find_structure(const Graph& g, StructureKind kind) {
  switch (kind) {
    case StructureKind::kHighDegree:
      for (Vertex v : g.vertices()) {
        if (g.degree(v) >= 5) return StructureMatch{kind, {v}};
      }
      return std::nullopt;
    case StructureKind::kDominatingDegree4:
      for (Vertex v : g.vertices()) {
        if (g.degree(v) != 4) continue;
        for (Vertex u : g.neighbors(v)) {
          if (g.degree(u) >= 3 && dominates(g, v, u)) return StructureMatch{kind, {v, u}};
        }
      }
      return std::nullopt;
    case StructureKind::kPendantTriangle:
      return find_pendant_triangle(g);
    case StructureKind::kHeavyTriangle:
    case StructureKind::kDegree4Triangle:
      return find_triangle(g, kind);
    case StructureKind::kDegree4HighNeighbor:
      for (Vertex v : g.vertices()) {
        if (g.degree(v) != 4) continue;
        for (Vertex u : g.neighbors(v)) {
          if (g.degree(u) >= 3) return StructureMatch{kind, {v, u}};
        }
      }
      return std::nullopt;
    case StructureKind::kLowDegreeEdge:
      for (Vertex v : g.vertices()) {
        if (g.degree(v) > 2) continue;
        for (Vertex u : g.neighbors(v)) {
          if (u > v && g.degree(u) <= 2) return StructureMatch{kind, {v, u}};
        }
      }
      return std::nullopt;
    case StructureKind::kDegreeTwoPath:
    case StructureKind::kPendantDegreeTwoPath:
      return find_two_paths(g, kind);
    case StructureKind::kLongCycleComponent:
      return find_long_cycle(g);
    case StructureKind::kSmallComponent:
      for (VertexSet& comp : connected_components(g)) {
        if (comp.size() <= 6) return StructureMatch{kind, std::move(comp)};
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace copath
