#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fatdelta/json_io.hpp"
#include "fatdelta/relgraph.hpp"
#include "helpers.hpp"

using namespace fatdelta::relgraph;

TEST_CASE("linear graphs") {
  RelGraph empty = linear_relgraph("");
  CHECK(empty.vertices == 1);
  CHECK(empty.edge_count() == 0);

  RelGraph mum = linear_relgraph("mum");
  CHECK(mum.vertices == 4);
  CHECK(mum.edge_count() == 3);
  CHECK(mum.marked == std::vector<bool>{true, false, true});
  CHECK(is_linear(mum));

  CHECK(is_linear(linear_relgraph("uu")));
  CHECK_FALSE(is_linear(terminal_relgraph()));
  CHECK_THROWS_AS(linear_relgraph("ux"), std::invalid_argument);
}

TEST_CASE("path enumeration") {
  RelGraph uu = linear_relgraph("uu");
  auto paths2 = enumerate_paths(uu, 2);
  REQUIRE(paths2.size() == 1);
  CHECK(paths2[0].edges == std::vector<int>{0, 1});

  RelGraph loop = terminal_relgraph();
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_paths(loop, n).size() == 1);
  }
  CHECK_THROWS_AS(enumerate_paths(uu, 0), std::invalid_argument);
}

TEST_CASE("concatenation") {
  // a 4-cycle
  RelGraph cycle(4, {{0, 1, false}, {1, 2, false}, {2, 3, true}, {3, 0, true}});
  Path p{{0}}, q{{1}}, r{{2, 3}};
  CHECK(concat(cycle, concat(cycle, p, q), r) == concat(cycle, p, concat(cycle, q, r)));
  CHECK_THROWS_AS(concat(cycle, p, r), std::invalid_argument);

  // exhaustive associativity and marked-closure over short paths
  for (const auto& g : testutil::enumerate_relgraphs(2, 2)) {
    std::vector<Path> short_paths;
    for (int n = 1; n <= 2; ++n) {
      for (auto& pth : enumerate_paths(g, n)) short_paths.push_back(pth);
    }
    for (const auto& a : short_paths) {
      for (const auto& b : short_paths) {
        if (path_tgt(g, a) != path_src(g, b)) continue;
        Path ab = concat(g, a, b);
        CHECK(path_marked(g, ab) == (path_marked(g, a) && path_marked(g, b)));
        for (const auto& c : short_paths) {
          if (path_tgt(g, b) != path_src(g, c)) continue;
          CHECK(concat(g, ab, c) == concat(g, a, concat(g, b, c)));
        }
      }
    }
  }
}

TEST_CASE("bounded free objects and the monad structure") {
  RelGraph t = terminal_relgraph();
  BoundedFree ft = free_bounded(t, 3);
  CHECK(ft.graph.vertices == 1);
  REQUIRE(ft.graph.edge_count() == 3);
  for (int e = 0; e < 3; ++e) {
    CHECK(ft.graph.marked[e]);
    CHECK(ft.paths[e].length() == e + 1);
  }

  // at bound 1 the free object of the terminal graph is the terminal graph
  CHECK(free_bounded(t, 1).graph == t);

  // unit then multiplication of a singleton is the original path
  RelGraph um = linear_relgraph("um");
  Path p = unit_edge(um, 1);
  CHECK(mult(um, {p}, 4) == p);

  // blocks of lengths 2 and 3 concatenate to length 5 over the terminal graph
  BoundedFree ft5 = free_bounded(t, 5);
  Path block2 = ft5.paths[free_edge_of_path(ft5, Path{{0, 0}})];
  Path block3 = ft5.paths[free_edge_of_path(ft5, Path{{0, 0, 0}})];
  CHECK(mult(t, {block2, block3}, 5).length() == 5);
  CHECK_THROWS_AS(mult(t, {block2, block3}, 4), TruncationError);

  // unit and multiplication laws, degreewise: splitting any bounded path
  // into unit blocks and concatenating is the identity
  for (const auto& g : testutil::enumerate_relgraphs(3, 4)) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& pth : enumerate_paths(g, n)) {
        std::vector<Path> units;
        for (int e : pth.edges) units.push_back(unit_edge(g, e));
        if (!(mult(g, units, 4) == pth) || !(mult(g, {pth}, 4) == pth)) {
          FAIL("monad unit laws break on a path of length ", n);
        }
      }
    }
  }
}

TEST_CASE("terminal graph receives exactly one map") {
  RelGraph t = terminal_relgraph();
  CHECK(enumerate_maps(linear_relgraph("um"), t).size() == 1);
  for (const auto& g : testutil::enumerate_relgraphs(2, 4)) {
    CHECK(enumerate_maps(g, t).size() == 1);
  }
}

TEST_CASE("map validation") {
  RelGraph um = linear_relgraph("um");
  RelGraph mm = linear_relgraph("mm");
  CHECK_NOTHROW(RelGraphMap(um, mm, {0, 1, 2}, {0, 1}));
  // a marked edge cannot land on an unmarked edge
  RelGraph uu = linear_relgraph("uu");
  CHECK_THROWS_AS(RelGraphMap(um, uu, {0, 1, 2}, {0, 1}), std::invalid_argument);
  // endpoints must be preserved
  CHECK_THROWS_AS(RelGraphMap(um, mm, {0, 0, 1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("pullbacks") {
  RelGraph t = terminal_relgraph();
  {
    // along an identity, the pullback is the other leg's domain
    RelGraph um = linear_relgraph("um");
    RelGraphMap f = terminal_map(um);
    PullbackResult pb = pullback(f, identity_map(t));
    CHECK(pb.graph == um);
  }
  {
    // one marked loop squared over itself
    RelGraphMap id = identity_map(t);
    PullbackResult pb = pullback(id, id);
    CHECK(pb.graph == t);
  }
  {
    // two single-edge graphs over the loop: four vertices, one edge
    RelGraph u = linear_relgraph("u");
    RelGraphMap f = terminal_map(u), g = terminal_map(u);
    PullbackResult pb = pullback(f, g);
    CHECK(pb.graph.vertices == 4);
    CHECK(pb.graph.edge_count() == 1);
    CHECK(testutil::relgraph_pullback_universal(f, g, pb.graph, pb.proj1, pb.proj2,
                                                testutil::enumerate_relgraphs(3, 2)));
  }
  {
    // marking of a pullback edge requires both components marked
    RelGraph mixed(1, {{0, 0, true}, {0, 0, false}});
    RelGraphMap f = terminal_map(mixed);
    PullbackResult pb = pullback(f, f);
    REQUIRE(pb.graph.edge_count() == 4);
    int marked = 0;
    for (int e = 0; e < 4; ++e) marked += pb.graph.marked[e];
    CHECK(marked == 1);
    CHECK(testutil::relgraph_pullback_universal(f, f, pb.graph, pb.proj1, pb.proj2,
                                                testutil::enumerate_relgraphs(2, 2)));
  }
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(linear_relgraph("umum")));
  CHECK_FALSE(is_acyclic(terminal_relgraph()));
  CHECK_FALSE(is_acyclic(RelGraph(2, {{0, 1, false}, {1, 0, false}})));
}

TEST_CASE("relative graph JSON round trip") {
  for (const auto& g : testutil::enumerate_relgraphs(2, 2)) {
    auto j = fatdelta::io::to_json(g);
    CHECK(fatdelta::io::relgraph_from_json(j) == g);
    CHECK(fatdelta::io::to_json(fatdelta::io::relgraph_from_json(j)).dump() == j.dump());
  }
}
