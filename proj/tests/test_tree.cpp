#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmds/error.hpp"
#include "mmds/generators.hpp"
#include "mmds/oracle.hpp"
#include "mmds/tree_solver.hpp"
#include "support.hpp"

using namespace mmds;
using namespace mmds::test;

namespace {

bool leaf_state(const TreeNodeState& s) { return s.mplus && !s.mminus && s.m && s.mprime; }

}  // namespace

TEST_CASE("root_tree examples") {
  const RootedTree p4 = root_tree(path_graph(4), 0);
  CHECK(p4.root == 0);
  for (Vertex v = 0; v < 3; ++v) {
    REQUIRE(p4.children(v).size() == 1);
    CHECK(p4.children(v)[0] == v + 1);
  }
  CHECK(p4.is_leaf(3));
  CHECK(p4.post_order == std::vector<Vertex>{3, 2, 1, 0});

  const RootedTree k2 = root_tree(complete_graph(2), 1);
  REQUIRE(k2.children(1).size() == 1);
  CHECK(k2.children(1)[0] == 0);
  CHECK(k2.parent[0] == 1);

  const RootedTree star = root_tree(star_graph(4), 0);
  CHECK(star.children(0).size() == 4);

  CHECK_THROWS_AS(root_tree(cycle_graph(4), 0), PreconditionError);
  CHECK_THROWS_AS(root_tree(path_graph(3), 3), PreconditionError);
}

TEST_CASE("post order visits children before parents") {
  Rng rng(2);
  for (int it = 0; it < 30; ++it) {
    const Graph g = random_tree(rng.uniform(1, 60), rng);
    const RootedTree t = root_tree(g, static_cast<Vertex>(rng.uniform(0, g.order() - 1)));
    std::vector<std::size_t> pos(g.order());
    for (std::size_t i = 0; i < t.post_order.size(); ++i) pos[t.post_order[i]] = i;
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != t.root) CHECK(pos[v] < pos[t.parent[v]]);
  }
}

TEST_CASE("dp_compute examples") {
  const TreeDpState single = dp_compute(root_tree(Graph::from_edges(1, {}), 0), 1);
  CHECK(leaf_state(single.nodes[0]));

  const RootedTree p4 = root_tree(path_graph(4), 0);
  CHECK(dp_compute(p4, 1).nodes[p4.root].m);

  const RootedTree spider = root_tree(double_spider(), 0);
  CHECK_FALSE(dp_compute(spider, 1).nodes[spider.root].m);
}

TEST_CASE("solve_tree examples") {
  CHECK(solve_tree({star_graph(3), 1}));
  CHECK_FALSE(solve_tree({double_spider(), 1}));
  CHECK(solve_tree({double_spider(), 2}));
  CHECK_THROWS_AS(solve_tree({cycle_graph(5), 1}), PreconditionError);
  CHECK_THROWS_AS(solve_tree({g1(4, {{1, 2}, {3, 4}}), 1}), PreconditionError);
}

TEST_CASE("state invariants hold at every node") {
  Rng rng(6);
  for (int it = 0; it < 200; ++it) {
    const Graph g = random_tree(rng.uniform(1, 40), rng);
    const RootedTree t = root_tree(g, 0);
    const TreeDpState dp = dp_compute(t, static_cast<int>(rng.uniform(1, 3)));
    for (Vertex v = 0; v < g.order(); ++v) {
      const TreeNodeState& s = dp.nodes[v];
      CHECK(s.m == (s.mplus || s.mminus));
      if (s.mprime) CHECK_FALSE(s.mminus);
      if (t.is_leaf(v)) CHECK(leaf_state(s));
    }
  }
}

TEST_CASE("solve_tree matches the oracle and does not depend on the root") {
  Rng rng(12);
  for (int it = 0; it < 600; ++it) {
    const Graph g = random_tree(rng.uniform(1, 13), rng);
    const int k = static_cast<int>(rng.uniform(1, 3));
    const bool expected = brute_force_mmds({g, k}).has_value();
    CHECK(solve_tree({g, k}) == expected);
    for (Vertex r = 0; r < g.order(); ++r) CHECK(dp_compute(root_tree(g, r), k).nodes[r].m == expected);
  }
}

TEST_CASE("tree_witness is valid exactly on YES instances") {
  Rng rng(14);
  for (int it = 0; it < 400; ++it) {
    const Instance inst{random_tree(rng.uniform(1, 200), rng), static_cast<int>(rng.uniform(1, 3))};
    const auto w = tree_witness(inst);
    CHECK(w.has_value() == solve_tree(inst));
    if (w) CHECK(is_mmds(inst, *w));
  }
}

TEST_CASE("the literal four-flag recurrence misses the path on four vertices") {
  // {1, 4} is a witness for P4 with k = 1, but the literal recurrence treats
  // vertex 3 as a vertex that must be in S and then rejects vertex 2.
  const RootedTree p4 = root_tree(path_graph(4), 0);
  CHECK(brute_force_mmds({path_graph(4), 1}));
  CHECK_FALSE(dp_compute_literal(p4, 1).nodes[p4.root].m);
  CHECK(dp_compute(p4, 1).nodes[p4.root].m);
  // It agrees on the leaf values and on the double spider.
  CHECK(leaf_state(dp_compute_literal(p4, 1).nodes[3]));
  const RootedTree spider = root_tree(double_spider(), 0);
  CHECK_FALSE(dp_compute_literal(spider, 1).nodes[spider.root].m);
}

TEST_CASE("the dp handles deep paths without recursion") {
  const Instance path{path_graph(200000), 2};
  CHECK(solve_tree(path));
  const auto w = tree_witness(path);
  REQUIRE(w);
  CHECK(is_mmds(path, *w));
}
