#include "mmds/split_solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mmds/error.hpp"
#include "mmds/oracle.hpp"
#include "mmds/set_cover.hpp"
#include "mmds/subsets.hpp"

namespace mmds {

namespace {

void check_preconditions(const Instance& inst, const SplitPartition& part) {
  const Graph& g = inst.graph;
  if (part.clique.universe() != g.order() || part.independent.universe() != g.order() ||
      !is_split_partition(g, part)) {
    throw PreconditionError("not a split partition of the graph");
  }
  if (!is_connected(g)) throw PreconditionError("split solver requires a connected graph");
}

SplitOutcome small_clique(const Instance& inst, const SplitPartition& part) {
  const Graph& g = inst.graph;
  SplitOutcome out;
  out.route = SplitRoute::SmallClique;
  out.guesses = 1;
  VertexSet s(g.order(), part.clique.members());
  for (Vertex v : part.independent) {
    const auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return part.clique.contains(w); })) s.insert(v);
  }
  if (is_mmds(inst, s)) out.witness = std::move(s);
  return out;
}

SplitOutcome guess_independent(const Instance& inst, const SplitPartition& part, std::size_t cover_budget) {
  const Graph& g = inst.graph;
  const std::size_t n = g.order();
  const auto k = static_cast<std::size_t>(inst.k);
  const std::vector<Vertex>& ind = part.independent.members();
  const std::vector<Vertex>& cl = part.clique.members();
  if (ind.size() > 62) throw CapExceeded("independent side too large to enumerate: " + std::to_string(ind.size()));

  // bit i of nbr_mask[j] set iff cl[j] is adjacent to ind[i]
  std::vector<std::uint64_t> nbr_mask(cl.size(), 0);
  for (std::size_t i = 0; i < ind.size(); ++i) {
    for (Vertex w : g.neighbors(ind[i])) {
      const auto it = std::lower_bound(cl.begin(), cl.end(), w);
      if (it != cl.end() && *it == w) nbr_mask[static_cast<std::size_t>(it - cl.begin())] |= std::uint64_t{1} << i;
    }
  }

  SplitOutcome out;
  out.route = SplitRoute::GuessIndependent;
  for_each_subset_by_size(ind.size(), ind.size(), [&](const std::vector<std::size_t>& pick) {
    ++out.guesses;
    std::uint64_t si = 0;
    for (std::size_t i : pick) si |= std::uint64_t{1} << i;
    std::size_t x = 0;
    for (std::uint64_t m : nbr_mask) x = std::max<std::size_t>(x, std::popcount(m & si));
    if (x > k) return false;
    const std::size_t bound = k - x;

    SetCoverInstance sc;
    sc.bound = bound;
    for (std::size_t i = 0; i < ind.size(); ++i)
      if (!(si >> i & 1)) sc.universe.push_back(static_cast<int>(i));
    sc.family.resize(cl.size());
    for (std::size_t j = 0; j < cl.size(); ++j)
      for (int e : sc.universe)
        if (nbr_mask[j] >> e & 1) sc.family[j].push_back(e);

    auto assemble = [&](const std::vector<std::size_t>& cover) {
      VertexSet s(n);
      for (std::size_t i : pick) s.insert(ind[i]);
      for (std::size_t j : cover) s.insert(cl[j]);
      return s;
    };

    const auto cover = exact_set_cover(sc);
    if (!cover) return false;
    VertexSet s = assemble(*cover);
    if (is_mmds(inst, s)) {
      out.x = x;
      out.clique_part = cover->size();
      out.witness = std::move(s);
      return true;
    }
    // The minimum cover failed the full check; some other cover within the
    // bound may still pass.
    const auto status = enumerate_covers(sc, bound, cover_budget, [&](const std::vector<std::size_t>& c) {
      VertexSet t = assemble(c);
      if (!is_mmds(inst, t)) return false;
      out.x = x;
      out.clique_part = c.size();
      out.witness = std::move(t);
      return true;
    });
    if (status == CoverEnumeration::BudgetHit)
      throw CapExceeded("cover enumeration budget of " + std::to_string(cover_budget) + " exhausted");
    return status == CoverEnumeration::Accepted;
  });
  return out;
}

SplitOutcome guess_clique(const Instance& inst, const SplitPartition& part) {
  const Graph& g = inst.graph;
  const std::size_t n = g.order();
  const std::vector<Vertex>& ind = part.independent.members();
  const std::vector<Vertex>& cl = part.clique.members();

  SplitOutcome out;
  out.route = SplitRoute::GuessClique;
  for_each_subset_by_size(cl.size(), static_cast<std::size_t>(inst.k), [&](const std::vector<std::size_t>& pick) {
    ++out.guesses;
    VertexSet s(n);
    for (std::size_t j : pick) s.insert(cl[j]);
    for (Vertex v : ind) {
      const auto nb = g.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return s.contains(w); })) s.insert(v);
    }
    if (!is_mmds(inst, s)) return false;
    out.clique_part = pick.size();
    out.witness = std::move(s);
    return true;
  });
  return out;
}

}  // namespace

SplitOutcome solve_split_detailed(const Instance& inst, const SplitPartition& part, std::size_t cover_budget) {
  check_preconditions(inst, part);
  const auto k = static_cast<std::size_t>(inst.k);
  if (part.clique.size() <= k) return small_clique(inst, part);
  if (2 * part.independent.size() <= inst.graph.order()) return guess_independent(inst, part, cover_budget);
  return guess_clique(inst, part);
}

std::optional<VertexSet> solve_split(const Instance& inst, const SplitPartition& part) {
  return solve_split_detailed(inst, part).witness;
}

}  // namespace mmds
