#include "copath/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>

namespace copath {

int PathDecomposition::width() const {
  int w = -1;
  for (const Bag& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::optional<PdViolation> validate(const Graph& g, const PathDecomposition& pd) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> first(n, -1);
  std::vector<int> last(n, -1);
  std::vector<int> count(n, 0);

  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    for (Vertex v : pd.bags[i]) {
      if (!g.contains(v)) {
        return PdViolation{PdProperty::kCoverage, {v}, "bag " + std::to_string(i) + " holds non-vertex " + std::to_string(v)};
      }
      const auto vi = static_cast<std::size_t>(v);
      if (first[vi] < 0) first[vi] = static_cast<int>(i);
      if (last[vi] == static_cast<int>(i)) continue;  // repeated inside one bag
      last[vi] = static_cast<int>(i);
      ++count[vi];
    }
  }
  for (Vertex v : g.vertices()) {
    if (first[static_cast<std::size_t>(v)] < 0) {
      return PdViolation{PdProperty::kCoverage, {v}, "vertex " + std::to_string(v) + " is in no bag"};
    }
  }
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    // With contiguous intervals, an edge is covered iff the intervals meet.
    bool covered = false;
    for (int i = std::max(first[u], first[v]); i <= std::min(last[u], last[v]) && !covered; ++i) {
      const Bag& b = pd.bags[static_cast<std::size_t>(i)];
      covered = std::find(b.begin(), b.end(), e.u) != b.end() && std::find(b.begin(), b.end(), e.v) != b.end();
    }
    if (!covered) {
      return PdViolation{PdProperty::kEdgeCoverage, {e.u, e.v},
                         "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag"};
    }
  }
  for (Vertex v : g.vertices()) {
    const auto vi = static_cast<std::size_t>(v);
    if (count[vi] != last[vi] - first[vi] + 1) {
      return PdViolation{PdProperty::kContiguity, {v}, "bags of vertex " + std::to_string(v) + " are not contiguous"};
    }
  }
  return std::nullopt;
}

NiceEventSequence to_nice(const Graph& g, const PathDecomposition& pd) {
  if (auto bad = validate(g, pd)) throw DecompositionError("invalid path decomposition: " + bad->message);

  NiceEventSequence seq;
  seq.width = pd.width();
  Bag current;
  for (const Bag& raw : pd.bags) {
    Bag next = raw;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (Vertex v : current) {
      if (!std::binary_search(next.begin(), next.end(), v)) seq.events.push_back({NiceEvent::Kind::kForget, v});
    }
    for (Vertex v : next) {
      if (!std::binary_search(current.begin(), current.end(), v)) seq.events.push_back({NiceEvent::Kind::kIntroduce, v});
    }
    current = std::move(next);
  }
  for (Vertex v : current) seq.events.push_back({NiceEvent::Kind::kForget, v});
  return seq;
}

void check_events(const NiceEventSequence& seq) {
  std::vector<Vertex> bag;
  std::vector<Vertex> done;
  for (const NiceEvent& ev : seq.events) {
    auto it = std::find(bag.begin(), bag.end(), ev.v);
    if (ev.kind == NiceEvent::Kind::kIntroduce) {
      if (it != bag.end() || std::find(done.begin(), done.end(), ev.v) != done.end()) {
        throw DecompositionError("vertex " + std::to_string(ev.v) + " introduced twice");
      }
      bag.push_back(ev.v);
      if (static_cast<int>(bag.size()) - 1 > seq.width) {
        throw DecompositionError("event sequence exceeds its declared width");
      }
    } else {
      if (it == bag.end()) throw DecompositionError("vertex " + std::to_string(ev.v) + " forgotten while absent");
      bag.erase(it);
      done.push_back(ev.v);
    }
  }
  if (!bag.empty()) throw DecompositionError("event sequence does not end with an empty bag");
}

PathDecomposition replay(const NiceEventSequence& seq) {
  PathDecomposition pd;
  Bag bag;
  for (const NiceEvent& ev : seq.events) {
    if (ev.kind == NiceEvent::Kind::kIntroduce) {
      bag.insert(std::lower_bound(bag.begin(), bag.end(), ev.v), ev.v);
    } else {
      bag.erase(std::remove(bag.begin(), bag.end(), ev.v), bag.end());
    }
    if (!bag.empty()) pd.bags.push_back(bag);
  }
  return pd;
}

namespace {

bool subset_of(const Bag& a, const Bag& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

PathDecomposition normalize(PathDecomposition pd) {
  for (Bag& b : pd.bags) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::vector<Bag> out;
  for (Bag& b : pd.bags) {
    if (!out.empty() && subset_of(b, out.back())) continue;
    while (!out.empty() && subset_of(out.back(), b)) out.pop_back();
    out.push_back(std::move(b));
  }
  pd.bags = std::move(out);
  return pd;
}

PathDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<int> reach(n, -1);
  for (Vertex v : order) {
    int r = pos[static_cast<std::size_t>(v)];
    for (Vertex u : g.neighbors(v)) r = std::max(r, pos[static_cast<std::size_t>(u)]);
    reach[static_cast<std::size_t>(v)] = r;
  }
  PathDecomposition pd;
  pd.bags.resize(order.size());
  for (Vertex v : order) {
    const auto vi = static_cast<std::size_t>(v);
    for (int i = pos[vi]; i <= reach[vi]; ++i) pd.bags[static_cast<std::size_t>(i)].push_back(v);
  }
  for (Bag& b : pd.bags) std::sort(b.begin(), b.end());
  return normalize(std::move(pd));
}

namespace {

// Layout of one connected component minimising the vertex separation number.
std::vector<Vertex> exact_component_order(const Graph& g, const VertexSet& comp) {
  const int m = static_cast<int>(comp.size());
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (Vertex u : g.neighbors(comp[static_cast<std::size_t>(i)])) {
      auto it = std::lower_bound(comp.begin(), comp.end(), u);
      nbr[static_cast<std::size_t>(i)] |= 1u << (it - comp.begin());
    }
  }
  const std::uint32_t full = m == 32 ? ~0u : ((1u << m) - 1u);
  const std::size_t states = std::size_t{1} << m;

  // boundary[S]: vertices of S with a neighbour outside S.
  std::vector<std::uint8_t> boundary(states, 0);
  for (std::size_t s = 0; s < states; ++s) {
    const auto set = static_cast<std::uint32_t>(s);
    int b = 0;
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if ((nbr[static_cast<std::size_t>(i)] & ~set & full) != 0) ++b;
    }
    boundary[s] = static_cast<std::uint8_t>(b);
  }
  // cost[S]: best achievable max boundary over all completions of prefix S.
  std::vector<std::uint8_t> cost(states, 0);
  for (std::size_t s = states - 1; s-- > 0;) {
    const auto set = static_cast<std::uint32_t>(s);
    std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
    for (std::uint32_t rest = ~set & full; rest != 0; rest &= rest - 1) {
      const std::size_t t = set | (rest & (~rest + 1));
      best = std::min(best, std::max(boundary[t], cost[t]));
    }
    cost[s] = best;
  }
  std::vector<Vertex> order;
  std::uint32_t set = 0;
  while (set != full) {
    for (int i = 0; i < m; ++i) {
      if ((set >> i) & 1u) continue;
      const std::size_t t = set | (1u << i);
      if (std::max(boundary[t], cost[t]) == cost[set]) {
        order.push_back(comp[static_cast<std::size_t>(i)]);
        set = static_cast<std::uint32_t>(t);
        break;
      }
    }
  }
  return order;
}

// Greedy boundary-minimising layout from a fixed start vertex.
std::vector<Vertex> greedy_order(const Graph& g, const VertexSet& comp, Vertex start, int& width) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> outside(n, 0);
  std::vector<bool> placed(n, false);
  std::vector<bool> touched(n, false);
  for (Vertex v : comp) outside[static_cast<std::size_t>(v)] = g.degree(v);

  std::vector<Vertex> order;
  int bd = 0;
  width = 0;
  auto place = [&](Vertex v) {
    int delta = outside[static_cast<std::size_t>(v)] > 0 ? 1 : 0;
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (placed[wi] && outside[wi] == 1) --delta;
      --outside[wi];
      touched[wi] = true;
    }
    placed[static_cast<std::size_t>(v)] = true;
    order.push_back(v);
    // The new vertex's bag also holds the old boundary.
    width = std::max(width, bd);
    bd += delta;
  };
  place(start);
  while (order.size() < comp.size()) {
    Vertex best = -1;
    std::tuple<int, int, int> best_key{};
    for (Vertex v : comp) {
      const auto vi = static_cast<std::size_t>(v);
      if (placed[vi]) continue;
      int delta = outside[vi] > 0 ? 1 : 0;
      for (Vertex w : g.neighbors(v)) {
        const auto wi = static_cast<std::size_t>(w);
        if (placed[wi] && outside[wi] == 1) --delta;
      }
      std::tuple<int, int, int> key{delta, touched[vi] ? 0 : 1, g.degree(v)};
      if (best < 0 || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    place(best);
  }
  return order;
}

}  // namespace

PathwidthResult exact_pathwidth(const Graph& g, int limit) {
  std::vector<Vertex> order;
  for (const VertexSet& comp : connected_components(g)) {
    if (static_cast<int>(comp.size()) > limit) {
      throw SizeLimitError("component of " + std::to_string(comp.size()) + " vertices exceeds pathwidth limit " +
                           std::to_string(limit));
    }
    auto part = exact_component_order(g, comp);
    order.insert(order.end(), part.begin(), part.end());
  }
  PathDecomposition pd = decomposition_from_order(g, order);
  return {pd.width(), std::move(pd)};
}

PathDecomposition heuristic_pd(const Graph& g) {
  constexpr std::size_t kMaxStarts = 24;
  std::vector<Vertex> order;
  for (const VertexSet& comp : connected_components(g)) {
    std::vector<Vertex> starts = comp;
    std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    if (starts.size() > kMaxStarts) starts.resize(kMaxStarts);
    std::vector<Vertex> best;
    int best_width = std::numeric_limits<int>::max();
    for (Vertex s : starts) {
      int w = 0;
      auto cand = greedy_order(g, comp, s, w);
      if (w < best_width) {
        best_width = w;
        best = std::move(cand);
      }
    }
    order.insert(order.end(), best.begin(), best.end());
  }
  return decomposition_from_order(g, order);
}

PathDecomposition best_effort_pd(const Graph& g, int limit) {
  for (const VertexSet& comp : connected_components(g)) {
    if (static_cast<int>(comp.size()) > limit) return heuristic_pd(g);
  }
  return exact_pathwidth(g, limit).decomposition;
}

GuardReport guard_check(const Graph& g, int k) {
  GuardReport r;
  for (Vertex v : g.vertices()) {
    const int d = g.degree(v);
    if (d == 3) ++r.n3;
    if (d == 4) ++r.n4;
    if (d >= 5) ++r.n_ge5;
  }
  const long long kk = k;
  r.vertex_bound_ok = g.alive_count() <= 100 * kk;
  // n3/6 + n4/3 <= 2k/3, scaled by 6.
  r.weight_bound_ok = r.n3 + 2LL * r.n4 <= 4 * kk;
  return r;
}

ProperReport check_proper(const Graph& g) {
  ProperReport r;
  for (Vertex v : g.vertices()) {
    const int d = g.degree(v);
    if (d > 4) r.max_degree_ok = false;
    if (d == 4) {
      for (Vertex u : g.neighbors(v)) {
        if (g.degree(u) > 2) r.degree4_neighbors_ok = false;
      }
    }
    if (d == 2) {
      const VertexSet& nv = g.neighbors(v);
      if (g.degree(nv[0]) < 3 && g.degree(nv[1]) < 3) r.degree2_support_ok = false;
    }
  }
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() < 6) r.component_size_ok = false;
  }
  return r;
}

void write_decomposition(std::ostream& out, const PathDecomposition& pd, int vertex_count) {
  out << "p pd " << pd.bags.size() << ' ' << pd.width() + 1 << ' ' << vertex_count << '\n';
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : pd.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
}

PathDecomposition read_decomposition(std::istream& in) {
  PathDecomposition pd;
  std::string line;
  int line_no = 0;
  bool header = false;
  std::size_t n_bags = 0;
  int max_bag = 0;
  int n_vertices = 0;
  auto fail = [&](const std::string& what) {
    throw DecompositionError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (header) fail("duplicate header");
      if (!(ls >> kind >> n_bags >> max_bag >> n_vertices) || kind != "pd") fail("malformed header");
      header = true;
      pd.bags.assign(n_bags, {});
    } else if (tag == "b") {
      if (!header) fail("bag before header");
      std::size_t index = 0;
      if (!(ls >> index) || index < 1 || index > n_bags) fail("bad bag index");
      Bag& bag = pd.bags[index - 1];
      int v = 0;
      while (ls >> v) {
        if (v < 1 || v > n_vertices) fail("vertex out of range");
        bag.push_back(v - 1);
      }
      if (!ls.eof()) fail("malformed bag line");
      if (static_cast<int>(bag.size()) > max_bag) fail("bag larger than declared maximum");
      std::sort(bag.begin(), bag.end());
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!header) throw DecompositionError("missing header");
  return pd;
}

}  // namespace copath
