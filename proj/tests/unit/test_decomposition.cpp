#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "copath/decomposition.hpp"
#include "copath/generators.hpp"
#include "helpers.hpp"

using namespace copath;
using testing::graph_of;

TEST_CASE("validate") {
  const Graph p3 = gen::path(3);
  const PathDecomposition ok{{{0, 1}, {1, 2}}};
  CHECK_FALSE(validate(p3, ok));
  CHECK(ok.width() == 1);

  auto bad_edge = validate(p3, PathDecomposition{{{0, 1}, {2}}});
  REQUIRE(bad_edge);
  CHECK(bad_edge->property == PdProperty::kEdgeCoverage);

  auto gap = validate(Graph(3), PathDecomposition{{{0}, {1}, {0, 2}}});
  REQUIRE(gap);
  CHECK(gap->property == PdProperty::kContiguity);
  CHECK(gap->witness == std::vector<Vertex>{0});

  auto missing = validate(p3, PathDecomposition{{{0, 1}}});
  REQUIRE(missing);
  CHECK(missing->property == PdProperty::kCoverage);
}

TEST_CASE("to_nice") {
  const Graph p3 = gen::path(3);
  const NiceEventSequence seq = to_nice(p3, PathDecomposition{{{0, 1}, {1, 2}}});
  using K = NiceEvent::Kind;
  const std::vector<NiceEvent> want{{K::kIntroduce, 0}, {K::kIntroduce, 1}, {K::kForget, 0},
                                    {K::kIntroduce, 2}, {K::kForget, 1},    {K::kForget, 2}};
  CHECK(seq.events == want);
  CHECK(seq.width == 1);
  CHECK_FALSE(validate(p3, replay(seq)));
  CHECK_NOTHROW(check_events(seq));

  const NiceEventSequence one = to_nice(Graph(1), PathDecomposition{{{0}}});
  CHECK(one.events == std::vector<NiceEvent>{{K::kIntroduce, 0}, {K::kForget, 0}});

  CHECK_THROWS_AS(to_nice(p3, PathDecomposition{{{0, 1}, {2}}}), DecompositionError);
}

TEST_CASE("check_events rejects malformed sequences") {
  using K = NiceEvent::Kind;
  CHECK_THROWS_AS(check_events({{{K::kIntroduce, 0}}, 0}), DecompositionError);
  CHECK_THROWS_AS(check_events({{{K::kForget, 0}}, 0}), DecompositionError);
  CHECK_THROWS_AS(check_events({{{K::kIntroduce, 0}, {K::kIntroduce, 0}, {K::kForget, 0}}, 0}), DecompositionError);
}

TEST_CASE("exact pathwidth") {
  CHECK(exact_pathwidth(gen::path(6)).width == 1);
  CHECK(exact_pathwidth(gen::cycle(6)).width == 2);
  CHECK(exact_pathwidth(gen::clique(5)).width == 4);
  CHECK(exact_pathwidth(gen::grid(3, 3)).width == 3);
  CHECK(exact_pathwidth(Graph(3)).width == 0);

  const auto r = exact_pathwidth(gen::cycle(6));
  CHECK_FALSE(validate(gen::cycle(6), r.decomposition));
  CHECK(r.decomposition.width() == 2);

  CHECK_THROWS_AS(exact_pathwidth(gen::path(30), 10), SizeLimitError);
  // The limit is per component.
  Graph two_paths(20);
  for (int i = 0; i + 1 < 10; ++i) {
    two_paths.add_edge(i, i + 1);
    two_paths.add_edge(10 + i, 11 + i);
  }
  CHECK(exact_pathwidth(two_paths, 10).width == 1);
}

TEST_CASE("no layout of C6 has width below two") {
  // Vertex separation equals pathwidth, so every order is a lower-bound witness.
  const Graph c6 = gen::cycle(6);
  std::vector<Vertex> order(6);
  std::iota(order.begin(), order.end(), 0);
  int best = 100;
  do {
    best = std::min(best, decomposition_from_order(c6, order).width());
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(best == 2);
}

TEST_CASE("heuristic decompositions are valid") {
  const Graph p10 = gen::path(10);
  const PathDecomposition a = heuristic_pd(p10);
  CHECK_FALSE(validate(p10, a));
  CHECK(a.width() >= 1);

  const Graph c8 = gen::cycle(8);
  const PathDecomposition b = heuristic_pd(c8);
  CHECK_FALSE(validate(c8, b));
  CHECK(b.width() >= exact_pathwidth(c8).width);

  const Graph grid = gen::grid(3, 3);
  const PathDecomposition c = heuristic_pd(grid);
  CHECK_FALSE(validate(grid, c));
  CHECK(c.width() >= 3);

  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = gen::gnm(40, 70, s);
    CHECK_FALSE(validate(g, heuristic_pd(g)));
  }
}

TEST_CASE("heuristic matches the exact width on paths and cycles") {
  CHECK(heuristic_pd(gen::path(50)).width() == 1);
  CHECK(heuristic_pd(gen::cycle(50)).width() == 2);
}

TEST_CASE("normalize keeps validity and drops redundant bags") {
  const Graph p3 = gen::path(3);
  const PathDecomposition pd{{{0}, {0, 1}, {1}, {1, 2}, {2}}};
  const PathDecomposition n = normalize(pd);
  CHECK_FALSE(validate(p3, n));
  CHECK(n.bags.size() == 2);
}

TEST_CASE("guard") {
  const Graph cube = [] {
    Graph g(8);
    for (int v = 0; v < 8; ++v) {
      for (int b = 0; b < 3; ++b) {
        if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
      }
    }
    return g;
  }();
  REQUIRE(is_proper(cube));
  const GuardReport none = guard_check(cube, 0);
  CHECK_FALSE(none.vertex_bound_ok);
  CHECK(none.n3 == 8);
  // n3 = 8: 8/6 <= 2k/3 needs k >= 2.
  CHECK_FALSE(guard_check(cube, 1).weight_bound_ok);
  CHECK(guard_check(cube, 2).ok());

  // Three degree-4 vertices: 3/3 = 1 > 2/3.
  Graph g(15);
  for (int c = 0; c < 3; ++c) {
    for (int i = 1; i <= 4; ++i) g.add_edge(5 * c, 5 * c + i);
  }
  const GuardReport r = guard_check(g, 1);
  CHECK(r.n3 == 0);
  CHECK(r.n4 == 3);
  CHECK(r.vertex_bound_ok);
  CHECK_FALSE(r.weight_bound_ok);
}

TEST_CASE("proper graph conditions") {
  CHECK(is_proper(gen::cycle(7)) == false);  // degree-2 vertices without support
  CHECK_FALSE(check_proper(gen::clique(6)).max_degree_ok);
  CHECK_FALSE(check_proper(gen::clique(4)).component_size_ok);
  const ProperReport star = check_proper(testing::star(4));
  CHECK_FALSE(star.component_size_ok);
  CHECK(star.degree4_neighbors_ok);
  CHECK(check_proper(gen::path(7)).degree2_support_ok == false);
}

TEST_CASE("decomposition text round trip") {
  const Graph g = gen::grid(2, 4);
  const PathDecomposition pd = exact_pathwidth(g).decomposition;
  std::stringstream ss;
  write_decomposition(ss, pd, g.vertex_count());
  CHECK(ss.str().rfind("p pd ", 0) == 0);
  const PathDecomposition back = read_decomposition(ss);
  CHECK(back.bags == pd.bags);

  std::istringstream bad("p pd 1 2 3\nb 1 1 9\n");
  CHECK_THROWS_AS(read_decomposition(bad), DecompositionError);
}

TEST_CASE("random layouts give valid decompositions") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = gen::gnm(9, 14, rng());
    std::vector<Vertex> order = g.vertices();
    std::shuffle(order.begin(), order.end(), rng);
    const PathDecomposition pd = decomposition_from_order(g, order);
    CHECK_FALSE(validate(g, pd));
    CHECK(pd.width() >= exact_pathwidth(g).width);
    const NiceEventSequence seq = to_nice(g, pd);
    CHECK(seq.width == pd.width());
  }
}
