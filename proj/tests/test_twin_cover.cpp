#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmds/error.hpp"
#include "mmds/generators.hpp"
#include "mmds/modulators.hpp"
#include "mmds/oracle.hpp"
#include "mmds/twin_cover_solver.hpp"
#include "support.hpp"

using namespace mmds;
using namespace mmds::test;

TEST_CASE("complete graph with an empty twin cover") {
  const Instance kn{complete_graph(5), 1};
  const TwinCoverOutcome out = solve_twin_cover_detailed(kn, VertexSet(5));
  CHECK(out.p_guesses == 1);
  REQUIRE(out.witness);
  CHECK(out.witness->members() == ids1({1}));
}

TEST_CASE("path on four vertices") {
  const Instance p4{path_graph(4), 1};
  const auto w = solve_twin_cover(p4, s1(4, {2, 3}));
  REQUIRE(w);
  CHECK(is_mmds(p4, *w));
}

TEST_CASE("four-cycle has no solution for k = 1") {
  const Instance c4{cycle_graph(4), 1};
  // {1, 2} leaves the edge 3-4 between non-twins, so it is not a twin cover
  CHECK_FALSE(is_twin_cover(c4.graph, s1(4, {1, 2})));
  CHECK_THROWS_AS(solve_twin_cover(c4, s1(4, {1, 2})), PreconditionError);
  const VertexSet t = s1(4, {1, 3});
  REQUIRE(is_twin_cover(c4.graph, t));
  const TwinCoverOutcome out = solve_twin_cover_detailed(c4, t);
  CHECK_FALSE(out.witness);
  CHECK(out.p_guesses == 4);
}

TEST_CASE("rejects sets that are not twin covers") {
  CHECK_THROWS_AS(solve_twin_cover({path_graph(4), 1}, s1(4, {2})), PreconditionError);
}

TEST_CASE("agrees with the oracle on random graphs with small twin covers") {
  Rng rng(41);
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = rng.uniform(1, 12);
    const auto mg = random_twin_cover(rng.uniform(0, std::min<std::size_t>(4, n)), n, 4, rng);
    const Instance inst{mg.graph, static_cast<int>(rng.uniform(1, 3))};
    const TwinCoverOutcome out = solve_twin_cover_detailed(inst, mg.modulator);
    CHECK(out.witness.has_value() == brute_force_mmds(inst).has_value());
    if (!out.witness) continue;
    CHECK(is_mmds(inst, *out.witness));
    // the witness meets the cover exactly in the accepted guess
    REQUIRE(out.accepted_p);
    for (Vertex v : mg.modulator) CHECK(out.witness->contains(v) == out.accepted_p->contains(v));
  }
}

TEST_CASE("swapping a chosen clique vertex for a twin keeps the verdict") {
  Rng rng(42);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = rng.uniform(3, 12);
    const auto mg = random_twin_cover(rng.uniform(0, 3), n, 4, rng);
    const Instance inst{mg.graph, static_cast<int>(rng.uniform(1, 3))};
    const auto w = solve_twin_cover(inst, mg.modulator);
    if (!w) continue;
    const CliqueSetPartition part = group_clique_sets(inst.graph, mg.modulator);
    for (const auto& grp : part.groups) {
      for (const auto& clique : grp.cliques) {
        if (clique.size() < 2 || !w->contains(clique.front())) continue;
        VertexSet swapped(n);
        for (Vertex v : *w)
          if (v != clique.front()) swapped.insert(v);
        swapped.insert(clique.back());
        CHECK(is_mmds(inst, swapped));
      }
    }
  }
}
