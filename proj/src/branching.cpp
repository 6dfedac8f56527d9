#include "copath/branching.hpp"

#include <algorithm>

#include "copath/bdd_dp.hpp"
#include "copath/cut_count.hpp"

namespace copath {

namespace {

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  for (Vertex v : a) {
    if (std::find(b.begin(), b.end(), v) == b.end()) out.push_back(v);
  }
  return out;
}

Branch make_branch(VertexSet remove, VertexSet discard = {}) {
  Branch b;
  b.remove = sorted(std::move(remove));
  b.discard = sorted(std::move(discard));
  b.decrement = static_cast<int>(b.remove.size());
  return b;
}

bool feasible_after(const Graph& g, const VertexSet& del, Problem problem) {
  const Graph rest = delete_vertices(g, del);
  if (problem.kind == Problem::Kind::kCoPath) return is_linear_forest(rest);
  return max_degree_at_most(rest, problem.kind == Problem::Kind::kBoundedDegree ? problem.d : 2);
}

// Minimum solution inside a component of at most six vertices.
VertexSet brute_force_component(const Graph& g, const VertexSet& comp, Problem problem) {
  Graph sub = g;
  VertexSet outside = minus(g.vertices(), comp);
  sub.delete_vertices(outside);
  const auto m = static_cast<unsigned>(comp.size());
  VertexSet best = comp;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) >= best.size()) continue;
    VertexSet del;
    for (unsigned i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) del.push_back(comp[i]);
    }
    if (feasible_after(sub, del, problem)) best = del;
  }
  return best;
}

void commit(Instance& inst, const VertexSet& remove, const VertexSet& discard) {
  inst.graph.delete_vertices(remove);
  inst.graph.delete_vertices(discard);
  inst.budget -= static_cast<int>(remove.size());
  inst.accumulated.insert(inst.accumulated.end(), remove.begin(), remove.end());
  std::sort(inst.accumulated.begin(), inst.accumulated.end());
}

}  // namespace

bool apply_small_component_rule(Instance& inst, Problem problem) {
  auto match = find_structure(inst.graph, StructureKind::kSmallComponent);
  if (!match) return false;
  const VertexSet& comp = match->vertices;
  VertexSet sol = brute_force_component(inst.graph, comp, problem);
  commit(inst, sol, minus(comp, sol));
  return true;
}

bool apply_low_degree_edge_rule(Instance& inst) {
  auto match = find_structure(inst.graph, StructureKind::kLowDegreeEdge);
  if (!match) return false;
  inst.graph.remove_edge(match->vertices[0], match->vertices[1]);
  return true;
}

bool apply_pendant_triangle_rule(Instance& inst) {
  auto match = find_structure(inst.graph, StructureKind::kPendantTriangle);
  if (!match) return false;
  const auto& t = match->vertices;
  commit(inst, {t[3]}, {t[0], t[1], t[2]});
  return true;
}

bool apply_degree_two_path_rule(Instance& inst) {
  Graph& g = inst.graph;
  if (auto path = find_structure(g, StructureKind::kDegreeTwoPath)) {
    const auto& p = path->vertices;
    g.delete_vertex(p[2]);
    g.add_edge(p[1], p[3]);
    return true;
  }
  // A pendant chain behaves like a single pendant vertex.
  if (auto path = find_structure(g, StructureKind::kPendantDegreeTwoPath)) {
    const auto& p = path->vertices;
    g.delete_vertex(p[1]);
    g.add_edge(p[0], p[2]);
    return true;
  }
  // Any cycle component needs exactly one deletion.
  if (auto cycle = find_structure(g, StructureKind::kLongCycleComponent)) {
    const auto& c = cycle->vertices;
    g.delete_vertex(c[1]);
    g.add_edge(c[0], c[2]);
    return true;
  }
  return false;
}

namespace {

template <typename ApplyOnce>
ReductionOutcome reduce_with(Instance inst, ApplyOnce&& apply_once) {
  ReductionOutcome out;
  while (inst.budget >= 0 && apply_once(inst, out.stats)) {
  }
  out.exhausted = inst.budget < 0;
  out.instance = std::move(inst);
  return out;
}

}  // namespace

ReductionOutcome reduce_cpcp(Instance inst) {
  return reduce_with(std::move(inst), [](Instance& i, ReductionStats& s) {
    if (apply_small_component_rule(i, Problem::cpcp())) return ++s.small_components, true;
    if (apply_low_degree_edge_rule(i)) return ++s.low_degree_edges, true;
    if (apply_pendant_triangle_rule(i)) return ++s.pendant_triangles, true;
    return false;
  });
}

ReductionOutcome reduce_cpp(Instance inst) {
  return reduce_with(std::move(inst), [](Instance& i, ReductionStats& s) {
    if (apply_small_component_rule(i, Problem::cpp())) return ++s.small_components, true;
    if (apply_degree_two_path_rule(i)) return ++s.two_path_contractions, true;
    return false;
  });
}

std::vector<int> BranchSet::decrements() const {
  std::vector<int> out;
  out.reserve(children.size());
  for (const Branch& b : children) out.push_back(b.decrement);
  return out;
}

BranchSet branch_b1(const Graph& g, Vertex v) {
  if (g.degree(v) < 3) throw PreconditionError("B1 needs a vertex of degree at least 3");
  const VertexSet& nv = g.neighbors(v);
  BranchSet bs;
  bs.children.push_back(make_branch({v}));
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) bs.children.push_back(make_branch(minus(nv, {nv[i], nv[j]})));
  }
  return bs;
}

BranchSet branch_b2(const Graph& g, Vertex v, Vertex u) {
  if (g.degree(v) < 3) throw PreconditionError("B2 needs a vertex of degree at least 3");
  if (!dominates(g, v, u)) throw PreconditionError("B2 needs v to dominate u");
  const VertexSet& nv = g.neighbors(v);
  BranchSet bs;
  bs.children.push_back(make_branch({v}));
  for (Vertex w : nv) {
    if (w != u) bs.children.push_back(make_branch(minus(nv, {u, w})));
  }
  return bs;
}

std::string to_string(Step s) {
  switch (s) {
    case Step::kStep1: return "step1";
    case Step::kStep2: return "step2";
    case Step::kStep3: return "step3";
    case Step::kStep4: return "step4";
    case Step::kStep5: return "step5";
    case Step::kStarStep3: return "step*3";
    case Step::kStarStep4: return "step*4";
  }
  return "unknown";
}

namespace {

[[noreturn]] void impossible(const std::string& what) { throw InternalInvariantError(what); }

// Neighbours of v other than the two listed, in id order.
std::pair<Vertex, Vertex> other_two(const Graph& g, Vertex v, Vertex a, Vertex b) {
  VertexSet rest = minus(g.neighbors(v), {a, b});
  return {rest[0], rest[1]};
}

// Deleting v, or the pair children, for a degree-4 vertex whose triangle
// {v, u1, u2} is fixed: u1, u2 come first in the pair list.
BranchSet triangle_pairs(Vertex v, Vertex u1, Vertex u2, Vertex u3, Vertex u4) {
  BranchSet bs;
  bs.children.push_back(make_branch({v}));
  bs.children.push_back(make_branch({u1, u2}));
  bs.children.push_back(make_branch({u1, u3}));
  bs.children.push_back(make_branch({u1, u4}));
  bs.children.push_back(make_branch({u2, u3}));
  bs.children.push_back(make_branch({u2, u4}));
  return bs;
}

StepBranching heavy_triangle_step(const Graph& g, const VertexSet& tri) {
  const Vertex v = tri[0], u1 = tri[1], u2 = tri[2];
  auto [u3, u4] = other_two(g, v, u1, u2);
  BranchSet bs = triangle_pairs(v, u1, u2, u3, u4);
  const Vertex t[] = {v, u1, u2};
  bs.children.push_back(make_branch(open_neighborhood(g, t)));
  return {Step::kStep3, "", std::move(bs)};
}

StepBranching triangle_step(const Graph& g, const VertexSet& tri) {
  const Vertex v = tri[0];
  const Vertex t[] = {tri[0], tri[1], tri[2]};
  const VertexSet outside = open_neighborhood(g, t);
  if (outside.size() == 2) impossible("step 4: |N({v,u1,u2})| = 2 is excluded by the small-component rule and step 2");
  if (outside.size() != 3) impossible("step 4: triangle neighbourhood must have exactly 3 vertices");
  auto [o1, o2] = other_two(g, v, tri[1], tri[2]);
  const Vertex u5 = minus(outside, {o1, o2}).front();
  const int d1 = g.degree(tri[1]);
  const int d2 = g.degree(tri[2]);

  if (d1 == 4 || d2 == 4) {
    const Vertex u1 = d1 == 4 ? tri[1] : tri[2];
    const Vertex u2 = d1 == 4 ? tri[2] : tri[1];
    if (!g.adjacent(u1, u5)) impossible("step 4 case 1: v would dominate u1 (step 2)");
    const bool to_o1 = g.adjacent(u1, o1);
    const bool to_o2 = g.adjacent(u1, o2);
    if (to_o1 == to_o2) impossible("step 4 case 1: u1 must meet exactly one of u3, u4");
    const Vertex u3 = to_o1 ? o1 : o2;
    const Vertex u4 = to_o1 ? o2 : o1;
    if (g.degree(u2) == 2 && g.degree(u3) == 2) {
      BranchSet bs;
      bs.children.push_back(make_branch({v}));
      bs.children.push_back(make_branch({u1, u4}));
      return {Step::kStep4, "case 1.1", std::move(bs)};
    }
    if (g.degree(u2) == 4 && g.degree(u3) == 4) {
      if (g.adjacent(u2, u3)) impossible("step 4 case 1.3: u1 would dominate u3 (step 2)");
      impossible("step 4 case 1.2: six-vertex component");
    }
    impossible("step 4 case 1: d(u2), d(u3) must both be 2 or both be 4");
  }

  if (d1 == 3 && d2 == 3) {
    const Vertex u1 = tri[1], u2 = tri[2];
    if (g.neighbors(u1) != sorted({v, u2, u5}) || g.neighbors(u2) != sorted({v, u1, u5})) {
      impossible("step 4 case 2: v would dominate u1 or u2 (step 2)");
    }
    BranchSet pairs = branch_b1(g, v);
    pairs.children.erase(pairs.children.begin());  // the {v} child is refined below
    BranchSet bs;
    std::string detail;
    const VertexSet far = minus(g.neighbors(u5), {u1, u2});
    switch (g.degree(u5)) {
      case 2:
        impossible("step 4 case 2.1: triangle {u1,u2,u5} has one outside neighbour");
      case 3:
        detail = "case 2.2";
        bs.children.push_back(make_branch({v, far[0]}, {u1, u2, u5}));
        break;
      case 4:
        detail = "case 2.3";
        bs.children.push_back(make_branch({v, u5}));
        bs.children.push_back(make_branch({v, far[0], far[1]}, {u1, u2, u5}));
        break;
      default:
        impossible("step 4 case 2: d(u5) out of range");
    }
    bs.children.insert(bs.children.end(), pairs.children.begin(), pairs.children.end());
    return {Step::kStep4, detail, std::move(bs)};
  }

  // One triangle vertex of degree 2, the other of degree 3: v dominates the
  // degree-2 one, so (B2) applies.
  if ((d1 == 2 && d2 == 3) || (d1 == 3 && d2 == 2)) {
    const Vertex low = d1 == 2 ? tri[1] : tri[2];
    return {Step::kStep4, "degree-2 triangle vertex", branch_b2(g, v, low)};
  }
  impossible("step 4: two adjacent degree-2 vertices");
}

StepBranching high_neighbor_step(const Graph& g, Vertex v, Vertex u1, Step step) {
  VertexSet rest = minus(g.neighbors(v), {u1});
  const Vertex u2 = rest[0], u3 = rest[1], u4 = rest[2];
  const VertexSet far = minus(g.neighbors(u1), {v});
  for (Vertex w : far) {
    if (w == u2 || w == u3 || w == u4) impossible("step 5: v lies in a triangle (step 4)");
  }
  BranchSet bs;
  bs.children.push_back(make_branch({v}));
  bs.children.push_back(make_branch({u1, u2}));
  bs.children.push_back(make_branch({u1, u3}));
  bs.children.push_back(make_branch({u1, u4}));
  const std::pair<Vertex, Vertex> drop[] = {{u2, u3}, {u2, u4}, {u3, u4}};
  for (auto [a, b] : drop) {
    for (Vertex w : far) {
      VertexSet del = minus(far, {w});
      del.push_back(a);
      del.push_back(b);
      bs.children.push_back(make_branch(std::move(del)));
    }
  }
  return {step, "d(u1)=" + std::to_string(g.degree(u1)), std::move(bs)};
}

}  // namespace

std::optional<StepBranching> select_cpcp_step(const Graph& g) {
  if (auto m = find_structure(g, StructureKind::kHighDegree)) {
    return StepBranching{Step::kStep1, "", branch_b1(g, m->vertices[0])};
  }
  if (auto m = find_structure(g, StructureKind::kDominatingDegree4)) {
    return StepBranching{Step::kStep2, "", branch_b2(g, m->vertices[0], m->vertices[1])};
  }
  if (auto m = find_structure(g, StructureKind::kHeavyTriangle)) return heavy_triangle_step(g, m->vertices);
  if (auto m = find_structure(g, StructureKind::kDegree4Triangle)) return triangle_step(g, m->vertices);
  if (auto m = find_structure(g, StructureKind::kDegree4HighNeighbor)) {
    return high_neighbor_step(g, m->vertices[0], m->vertices[1], Step::kStep5);
  }
  return std::nullopt;
}

std::optional<StepBranching> select_cpp_step(const Graph& g) {
  if (auto m = find_structure(g, StructureKind::kHighDegree)) {
    return StepBranching{Step::kStep1, "", branch_b1(g, m->vertices[0])};
  }
  if (auto m = find_structure(g, StructureKind::kDominatingDegree4)) {
    return StepBranching{Step::kStep2, "", branch_b2(g, m->vertices[0], m->vertices[1])};
  }
  if (auto m = find_structure(g, StructureKind::kDegree4Triangle)) {
    // Keeping v, u1 and u2 together would keep a triangle, so the child
    // deleting {u3, u4} is dropped.
    const auto& t = m->vertices;
    auto [u3, u4] = other_two(g, t[0], t[1], t[2]);
    return StepBranching{Step::kStarStep3, "", triangle_pairs(t[0], t[1], t[2], u3, u4)};
  }
  if (auto m = find_structure(g, StructureKind::kDegree4HighNeighbor)) {
    return high_neighbor_step(g, m->vertices[0], m->vertices[1], Step::kStarStep4);
  }
  return std::nullopt;
}

const std::vector<FactorRow>& factor_table() {
  static const std::vector<FactorRow> rows = [] {
    auto rep = [](std::vector<int> head, int value, int times) {
      head.insert(head.end(), static_cast<std::size_t>(times), value);
      return head;
    };
    return std::vector<FactorRow>{
        {"step 1", rep({1}, 3, 10), 2.5445},
        {"step 2", {1, 2, 2, 2}, 2.3028},
        {"step 3", rep(rep({1}, 2, 5), 4, 1), 2.8186},
        {"step 4 case 1.1", {1, 2}, 1.6181},
        {"step 4 case 2.2", rep({2}, 2, 6), 2.6458},
        {"step 4 case 2.3", rep({2, 3}, 2, 6), 2.7145},
        {"step 5", rep({1, 2, 2, 2}, 3, 6), 2.8192},
        {"step 5 d(u1)=4", rep({1, 2, 2, 2}, 4, 9), 2.6328},
        {"step *3", rep({1}, 2, 5), 2.7913},
        {"step *4", rep({1, 2, 2, 2}, 3, 6), 2.8192},
    };
  }();
  return rows;
}

namespace {

class Search {
 public:
  Search(Problem problem, const SolverOptions& options) : problem_(problem), options_(options) {}

  std::optional<VertexSet> run(Instance inst) {
    ++stats_.nodes;
    ReductionOutcome red = problem_.kind == Problem::Kind::kCoPath ? reduce_cpp(std::move(inst))
                                                                    : reduce_cpcp(std::move(inst));
    stats_.reductions += static_cast<std::uint64_t>(red.stats.total());
    if (red.exhausted) return std::nullopt;
    Instance& cur = red.instance;
    if (cur.graph.empty()) return cur.accumulated;

    auto step = problem_.kind == Problem::Kind::kCoPath ? select_cpp_step(cur.graph) : select_cpcp_step(cur.graph);
    if (!step) return leaf(cur);
    for (const Branch& b : step->branches.children) {
      if (b.decrement > cur.budget) continue;
      Instance child = cur;
      commit(child, b.remove, b.discard);
      if (auto found = run(std::move(child))) return found;
    }
    return std::nullopt;
  }

  const SolveStats& stats() const { return stats_; }

 private:
  std::optional<VertexSet> leaf(const Instance& inst) {
    if (!options_.leaf_dp) throw std::runtime_error("branching left a non-empty proper graph and leaf DP is disabled");
    const ProperReport proper = check_proper(inst.graph);
    if (!proper.ok()) impossible("leaf graph is not proper");
    if (!guard_check(inst.graph, inst.budget).ok()) {
      ++stats_.guard_rejections;
      return std::nullopt;
    }
    ++stats_.dp_leaves;
    const PathDecomposition pd = best_effort_pd(inst.graph, options_.pw_limit);
    const NiceEventSequence events = to_nice(inst.graph, pd);
    stats_.max_width = std::max(stats_.max_width, events.width);

    if (problem_.kind == Problem::Kind::kCoPath) {
      const CppDecision d = decide_cpp(inst.graph, inst.budget, events, options_.repeats,
                                       derive_seed(options_.seed, leaf_index_++));
      stats_.repeats_used += d.repeats_used;
      if (d.answer != Decision::kYes) return std::nullopt;
      return inst.accumulated;
    }
    const BddResult r = bdd_dp_solve(inst.graph, events, 2);
    if (r.min_size > inst.budget) return std::nullopt;
    VertexSet out = inst.accumulated;
    out.insert(out.end(), r.witness.begin(), r.witness.end());
    return sorted(std::move(out));
  }

  Problem problem_;
  SolverOptions options_;
  SolveStats stats_;
  std::uint64_t leaf_index_ = 0;
};

SolveOutcome solve_with(Problem problem, const Graph& g, int k, const SolverOptions& options) {
  if (k < 0) throw std::invalid_argument("budget must be non-negative");
  Search search(problem, options);
  auto found = search.run(Instance{g, k, {}});
  SolveOutcome out;
  out.yes = found.has_value();
  if (found && problem.kind != Problem::Kind::kCoPath) out.witness = std::move(*found);
  out.stats = search.stats();
  return out;
}

}  // namespace

SolveOutcome solve_cpcp(const Graph& g, int k, const SolverOptions& options) {
  return solve_with(Problem::cpcp(), g, k, options);
}

SolveOutcome solve_cpp(const Graph& g, int k, const SolverOptions& options) {
  if (options.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  return solve_with(Problem::cpp(), g, k, options);
}

}  // namespace copath
