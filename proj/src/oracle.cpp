#include "copath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace copath::oracle {

namespace {

using Mask = std::uint64_t;

// Alive vertices renumbered 0..m-1 with adjacency bitmasks.
struct Compact {
  std::vector<Vertex> ids;
  std::vector<Mask> adj;
  std::vector<Edge> edges;  // compact indices

  explicit Compact(const Graph& g) : ids(g.vertices()) {
    if (ids.size() > 63) throw OracleLimitError("oracle supports at most 63 vertices");
    adj.assign(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (Vertex u : g.neighbors(ids[i])) {
        const auto j = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), u) - ids.begin());
        adj[i] |= Mask{1} << j;
        if (i < j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }

  int size() const { return static_cast<int>(ids.size()); }
  Mask full() const { return ids.size() == 64 ? ~Mask{0} : (Mask{1} << ids.size()) - 1; }
  int index_of(Vertex v) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) throw InvalidVertex("vertex " + std::to_string(v) + " not alive");
    return static_cast<int>(it - ids.begin());
  }
};

bool degrees_at_most(const Compact& c, Mask kept, int d) {
  for (Mask rest = kept; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (std::popcount(c.adj[static_cast<std::size_t>(i)] & kept) > d) return false;
  }
  return true;
}

// Components of G[kept] as vertex masks.
std::vector<Mask> components(const Compact& c, Mask kept) {
  std::vector<Mask> out;
  Mask left = kept;
  while (left != 0) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask grow = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) grow |= c.adj[static_cast<std::size_t>(std::countr_zero(f))];
      grow &= kept & ~comp;
      comp |= grow;
      frontier = grow;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

int edges_inside(const Compact& c, Mask kept) {
  int twice = 0;
  for (Mask rest = kept; rest != 0; rest &= rest - 1) {
    twice += std::popcount(c.adj[static_cast<std::size_t>(std::countr_zero(rest))] & kept);
  }
  return twice / 2;
}

bool acyclic(const Compact& c, Mask kept) {
  return edges_inside(c, kept) == std::popcount(kept) - static_cast<int>(components(c, kept).size());
}

bool satisfies(const Compact& c, Mask kept, Problem p) {
  const int d = p.kind == Problem::Kind::kBoundedDegree ? p.d : 2;
  if (!degrees_at_most(c, kept, d)) return false;
  return p.kind != Problem::Kind::kCoPath || acyclic(c, kept);
}

std::optional<Mask> minimum_deletion(const Compact& c, Problem p) {
  const int m = c.size();
  const Mask full = c.full();
  for (int s = 0; s <= m; ++s) {
    if (s == 0) {
      if (satisfies(c, full, p)) return Mask{0};
      continue;
    }
    // Gosper's hack over all s-subsets.
    Mask del = (Mask{1} << s) - 1;
    while (del <= full) {
      if (satisfies(c, full & ~del, p)) return del;
      const Mask low = del & (~del + 1);
      const Mask ripple = del + low;
      del = (((ripple ^ del) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

struct Stats {
  int a;
  int n;
  int e;
  Weight w;
};

Stats kept_stats(const Compact& c, const WeightAssignment& wa, Mask kept) {
  Stats s{0, std::popcount(kept), edges_inside(c, kept), 0};
  for (Mask rest = kept; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if ((c.adj[i] & kept) == 0) ++s.a;
    s.w += wa.vertex(c.ids[i]);
  }
  return s;
}

std::vector<std::size_t> edges_within(const Compact& c, Mask set) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& e = c.edges[i];
    if (((set >> e.u) & 1u) && ((set >> e.v) & 1u)) out.push_back(i);
  }
  return out;
}

Weight edge_weight(const Compact& c, const WeightAssignment& wa, std::size_t i) {
  const Edge& e = c.edges[i];
  return wa.edge(c.ids[static_cast<std::size_t>(e.u)], c.ids[static_cast<std::size_t>(e.v)]);
}

void require_candidate_size(const Compact& c) {
  if (c.size() > kCandidateLimit) {
    throw OracleLimitError("candidate enumeration supports at most " + std::to_string(kCandidateLimit) + " vertices");
  }
}

// Calls fn(stats, marker_weight) for each marked-cc-solution on `kept`.
template <typename Fn>
void for_each_marking(const Compact& c, const WeightAssignment& wa, Mask kept, Fn&& fn) {
  std::vector<std::vector<std::size_t>> per_comp;
  for (Mask comp : components(c, kept)) {
    if (std::popcount(comp) > 1) per_comp.push_back(edges_within(c, comp));
  }
  // A proper marker set of size = #non-isolate components has exactly one
  // marker per such component.
  std::vector<std::size_t> pick(per_comp.size(), 0);
  while (true) {
    Weight w = 0;
    for (std::size_t i = 0; i < per_comp.size(); ++i) w += edge_weight(c, wa, per_comp[i][pick[i]]);
    fn(static_cast<int>(per_comp.size()), w);
    std::size_t i = 0;
    while (i < per_comp.size() && ++pick[i] == per_comp[i].size()) pick[i++] = 0;
    if (i == per_comp.size()) break;
  }
}

}  // namespace

bool verify(const Graph& g, const VertexSet& s, Problem problem) {
  const Compact c(g);
  Mask del = 0;
  for (Vertex v : s) del |= Mask{1} << c.index_of(v);
  return satisfies(c, c.full() & ~del, problem);
}

int oracle_min(const Graph& g, Problem problem, int limit) {
  return static_cast<int>(oracle_solution(g, problem, limit).size());
}

VertexSet oracle_solution(const Graph& g, Problem problem, int limit) {
  if (g.alive_count() > limit) {
    throw OracleLimitError("graph has " + std::to_string(g.alive_count()) + " vertices, oracle limit is " +
                           std::to_string(limit));
  }
  const Compact c(g);
  const auto del = minimum_deletion(c, problem);
  if (!del) throw OracleLimitError("no feasible deletion set");  // unreachable: deleting all works
  VertexSet out;
  for (Mask rest = *del; rest != 0; rest &= rest - 1) out.push_back(c.ids[static_cast<std::size_t>(std::countr_zero(rest))]);
  return out;
}

std::map<CandidateStats, std::uint64_t> marked_cc_solution_counts(const Graph& g, const WeightAssignment& wa) {
  const Compact c(g);
  require_candidate_size(c);
  std::map<CandidateStats, std::uint64_t> out;
  for (Mask kept = 0; kept <= c.full(); ++kept) {
    if (!satisfies(c, kept, Problem::cpp())) continue;
    const Stats s = kept_stats(c, wa, kept);
    for_each_marking(c, wa, kept, [&](int markers, Weight mw) { ++out[{s.a, s.n, s.e, s.w + mw, markers}]; });
  }
  return out;
}

std::uint64_t count_marked_cc_solutions(const Graph& g, const WeightAssignment& wa, int n, int e, Weight weight) {
  std::uint64_t total = 0;
  for (const auto& [key, count] : marked_cc_solution_counts(g, wa)) {
    if (key.n == n && key.e == e && key.w == weight) total += count;
  }
  return total;
}

std::map<CandidateStats, std::uint64_t> cc_candidate_counts(const Graph& g, const WeightAssignment& wa) {
  const Compact c(g);
  require_candidate_size(c);
  std::map<CandidateStats, std::uint64_t> out;
  for (Mask kept = 0; kept <= c.full(); ++kept) {
    if (!degrees_at_most(c, kept, 2)) continue;
    const Stats s = kept_stats(c, wa, kept);
    std::vector<Mask> sides;
    for (Mask comp : components(c, kept)) {
      if (std::popcount(comp) > 1) sides.push_back(comp);
    }
    // Isolated vertices always sit in V1; each other component picks a side.
    for (Mask choice = 0; choice < (Mask{1} << sides.size()); ++choice) {
      Mask v1 = 0;
      for (std::size_t i = 0; i < sides.size(); ++i) {
        if (!((choice >> i) & 1u)) v1 |= sides[i];
      }
      const std::vector<std::size_t> markable = edges_within(c, v1);
      for (Mask mk = 0; mk < (Mask{1} << markable.size()); ++mk) {
        Weight w = s.w;
        for (std::size_t i = 0; i < markable.size(); ++i) {
          if ((mk >> i) & 1u) w += edge_weight(c, wa, markable[i]);
        }
        ++out[{s.a, s.n, s.e, w, std::popcount(mk)}];
      }
    }
  }
  return out;
}

std::uint64_t count_cc_candidates(const Graph& g, const WeightAssignment& wa, const CandidateStats& key) {
  const auto counts = cc_candidate_counts(g, wa);
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

std::optional<bool> isolates_solutions(const Graph& g, const WeightAssignment& wa, int k) {
  const Compact c(g);
  require_candidate_size(c);
  const int need = c.size() - k;
  Weight best = std::numeric_limits<Weight>::max();
  int ties = 0;
  for (Mask kept = 0; kept <= c.full(); ++kept) {
    if (std::popcount(kept) < need || !satisfies(c, kept, Problem::cpp())) continue;
    const Stats s = kept_stats(c, wa, kept);
    for_each_marking(c, wa, kept, [&](int, Weight mw) {
      const Weight w = s.w + mw;
      if (w < best) {
        best = w;
        ties = 1;
      } else if (w == best) {
        ++ties;
      }
    });
  }
  if (ties == 0) return std::nullopt;
  return ties == 1;
}

double branching_factor(const Recurrence& r) {
  if (r.decrements.empty()) throw std::invalid_argument("recurrence needs at least one branch");
  const int cmin = *std::min_element(r.decrements.begin(), r.decrements.end());
  if (cmin < 1) throw std::invalid_argument("branch decrements must be positive");
  if (r.decrements.size() == 1) return 1.0;
  auto f = [&](double x) {
    double s = 1.0;
    for (int c : r.decrements) s -= std::pow(x, -c);
    return s;
  };
  double lo = 1.0;
  double hi = std::pow(static_cast<double>(r.decrements.size()), 1.0 / cmin) + 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double round4(double x) { return std::round(x * 1e4) / 1e4; }

}  // namespace copath::oracle
