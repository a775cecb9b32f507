#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <sstream>

#include "mmds/error.hpp"
#include "mmds/generators.hpp"
#include "mmds/graph_classes.hpp"
#include "mmds/graph_io.hpp"
#include "mmds/modulators.hpp"
#include "support.hpp"

using namespace mmds;
using namespace mmds::test;

TEST_CASE("graph construction validates and normalizes edges") {
  const Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.degree(0) == 2);
  CHECK(g.max_degree() == 2);
  CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("adjacency is symmetric and degrees match") {
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    const Graph g = random_bounded_degree(15, 5, 40, rng);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
      for (Vertex w : g.neighbors(v)) CHECK(g.adjacent(w, v));
    }
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("induced subgraph renumbers kept vertices") {
  const Graph p4 = path_graph(4);
  const std::vector<Vertex> keep{1, 2, 3};
  CHECK(p4.induced(keep) == path_graph(3));
}

TEST_CASE("vertex sets reject bad members") {
  CHECK_THROWS_AS(VertexSet(3, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(VertexSet(3, {3}), PreconditionError);
  VertexSet s(5, {4, 1});
  CHECK(s.members() == std::vector<Vertex>{1, 4});
  s.insert(1);
  CHECK(s.size() == 2);
  CHECK(VertexSet::from_mask(5, 0b10010) == s);
  CHECK(format_vertex_set(s) == "2 5");
}

TEST_CASE("parse_graph examples") {
  const Instance k2 = parse_graph("mmds 2 1 1\n1 2\n");
  CHECK(k2.graph == complete_graph(2));
  CHECK(k2.k == 1);

  const Instance p4 = parse_graph("mmds 4 3 1\n1 2\n2 3\n3 4\n");
  CHECK(p4.graph == path_graph(4));

  try {
    parse_graph("mmds 3 3 2\n1 2\n2 3\n1 1\n");
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
}

TEST_CASE("parse_graph reports line numbers for malformed input") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("mmds 2 1\n1 2\n") == 1);
  CHECK(line_of("# c\nmmds 2 1 0\n1 2\n") == 2);
  CHECK(line_of("mmds 3 2 1\n1 2\n2 1\n") == 3);
  CHECK(line_of("mmds 3 1 1\n1 4\n") == 2);
  CHECK(line_of("mmds 3 1 1\n1 x\n") == 2);
  CHECK(line_of("mmds 3 1 1\n1 2\n2 3\n") == 3);
  CHECK(line_of("mmds 3 2 1\n1 2\n") != 0);
  CHECK(line_of("1 2\n") != 0);
}

TEST_CASE("comments and blank lines are tolerated and kept") {
  const ParsedGraph p = parse_graph_annotated("# hello\n\nmmds 2 1 3\n# mid\n1 2\n");
  CHECK(p.instance.k == 3);
  CHECK(p.comments == std::vector<std::string>{"hello", "mid"});
}

TEST_CASE("serialize round-trips") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    Instance inst{random_bounded_degree(rng.uniform(1, 20), 4, 30, rng), static_cast<int>(rng.uniform(1, 5))};
    CHECK(parse_graph(serialize(inst)) == inst);
  }
  const Instance inst{Graph::from_edges(3, {{2, 1}, {0, 2}}), 2};
  CHECK(serialize(inst) == "mmds 3 2 2\n1 3\n2 3\n");
}

TEST_CASE("vertex set files") {
  CHECK(parse_vertex_set("1 4\n", 4) == VertexSet(4, {0, 3}));
  CHECK(parse_vertex_set("\n", 4).empty());
  CHECK_THROWS_AS(parse_vertex_set("5", 4), ParseError);
  CHECK_THROWS_AS(parse_vertex_set("1 1", 4), ParseError);
}

TEST_CASE("is_tree and is_connected") {
  CHECK(is_tree(path_graph(4)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK_FALSE(is_tree(g1(4, {{1, 2}, {3, 4}})));
  CHECK(is_connected(complete_graph(2)));
  CHECK_FALSE(is_connected(Graph::from_edges(2, {})));
  CHECK(is_connected(cycle_graph(5)));
}

namespace {

// Smallest-first scan over all clique sides; returns the maximum clique side
// that yields a split partition, ties by lexicographic member list.
std::optional<std::vector<Vertex>> brute_split(const Graph& g) {
  const std::size_t n = g.order();
  std::optional<std::vector<Vertex>> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet c = VertexSet::from_mask(n, mask);
    VertexSet i(n);
    for (Vertex v = 0; v < n; ++v)
      if (!c.contains(v)) i.insert(v);
    if (!is_split_partition(g, {c, i})) continue;
    if (!best || c.size() > best->size() || (c.size() == best->size() && c.members() < *best)) best = c.members();
  }
  return best;
}

}  // namespace

TEST_CASE("recognize_split examples") {
  const auto k3 = recognize_split(complete_graph(3));
  REQUIRE(k3);
  CHECK(k3->clique.members() == ids1({1, 2, 3}));
  CHECK(k3->independent.empty());

  CHECK_FALSE(recognize_split(cycle_graph(4)));

  const auto star = recognize_split(star_graph(3));
  REQUIRE(star);
  CHECK(star->clique.size() == 2);
  CHECK(star->clique.members() == std::vector<Vertex>{0, 1});
}

TEST_CASE("recognize_split agrees with exhaustive bipartitions") {
  Rng rng(5);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = rng.uniform(1, 10);
    const Graph g = it % 2 ? random_split(rng.uniform(0, n), n, rng) : random_bounded_degree(n, 4, 12, rng);
    const auto fast = recognize_split(g);
    const auto slow = brute_split(g);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(is_split_partition(g, *fast));
      CHECK(fast->clique.members() == *slow);
    }
  }
}

TEST_CASE("compute_twin_cover examples") {
  const auto kn = compute_twin_cover(complete_graph(5), 0);
  REQUIRE(kn);
  CHECK(kn->empty());
  const auto p4 = compute_twin_cover(path_graph(4), 2);
  REQUIRE(p4);
  CHECK(p4->size() == 2);
  CHECK(is_twin_cover(path_graph(4), *p4));
  CHECK_FALSE(compute_twin_cover(path_graph(4), 1));
}

TEST_CASE("compute_cluster_modulator examples") {
  const Graph cliques = g1(5, {{1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const auto none = compute_cluster_modulator(cliques, 3);
  REQUIRE(none);
  CHECK(none->empty());
  const auto p4 = compute_cluster_modulator(path_graph(4), 3);
  REQUIRE(p4);
  CHECK(p4->size() == 1);
  CHECK((p4->contains(1) || p4->contains(2)));
  const auto c4 = compute_cluster_modulator(cycle_graph(4), 3);
  REQUIRE(c4);
  CHECK(c4->size() == 2);
}

TEST_CASE("modulator sizes match subset enumeration") {
  Rng rng(9);
  for (int it = 0; it < 120; ++it) {
    const std::size_t n = rng.uniform(1, 10);
    const Graph g = random_bounded_degree(n, 4, 14, rng);
    std::size_t best_twin = n + 1, best_cluster = n + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const VertexSet s = VertexSet::from_mask(n, mask);
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size < best_twin && is_twin_cover(g, s)) best_twin = size;
      if (size < best_cluster && is_cluster_modulator(g, s)) best_cluster = size;
    }
    const auto t = compute_twin_cover(g, n);
    const auto d = compute_cluster_modulator(g, n);
    REQUIRE(t);
    REQUIRE(d);
    CHECK(t->size() == best_twin);
    CHECK(d->size() == best_cluster);
    for (const auto& comp : components(g, &*t))
      for (Vertex u : comp)
        for (Vertex v : comp) CHECK(true_twins(g, u, v));
  }
}

TEST_CASE("group_clique_sets examples") {
  const auto k3 = group_clique_sets(complete_graph(3), VertexSet(3));
  REQUIRE(k3.groups.size() == 1);
  CHECK(k3.groups[0].signature.empty());
  CHECK(k3.groups[0].cliques == std::vector<std::vector<Vertex>>{{0, 1, 2}});

  const auto star = group_clique_sets(star_graph(3), VertexSet(4, {0}));
  REQUIRE(star.groups.size() == 1);
  CHECK(star.groups[0].signature == std::vector<Vertex>{0});
  CHECK(star.groups[0].cliques.size() == 3);

  const auto p4 = group_clique_sets(path_graph(4), s1(4, {2, 3}));
  REQUIRE(p4.groups.size() == 2);
  CHECK(p4.groups[0].signature == ids1({2}));
  CHECK(p4.groups[0].cliques == std::vector<std::vector<Vertex>>{ids1({1})});
  CHECK(p4.groups[1].signature == ids1({3}));
  CHECK(p4.groups[1].cliques == std::vector<std::vector<Vertex>>{ids1({4})});

  CHECK_THROWS_AS(group_clique_sets(path_graph(4), VertexSet(4)), PreconditionError);
}

TEST_CASE("group_clique_sets covers everything outside the modulator") {
  Rng rng(13);
  for (int it = 0; it < 50; ++it) {
    const auto mg = random_cluster(rng.uniform(0, 3), rng.uniform(3, 14), 4, rng);
    const auto part = group_clique_sets(mg.graph, mg.modulator);
    std::vector<Vertex> seen;
    for (const auto& grp : part.groups)
      for (const auto& c : grp.cliques) seen.insert(seen.end(), c.begin(), c.end());
    std::sort(seen.begin(), seen.end());
    CHECK(seen.size() + mg.modulator.size() == mg.graph.order());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}
