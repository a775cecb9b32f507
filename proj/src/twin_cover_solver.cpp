#include "mmds/twin_cover_solver.hpp"

#include <algorithm>
#include <string>

#include "mmds/error.hpp"
#include "mmds/modulators.hpp"
#include "mmds/oracle.hpp"
#include "mmds/subsets.hpp"

namespace mmds {

namespace {

bool intersects(const std::vector<Vertex>& sorted, const VertexSet& s) {
  return std::any_of(sorted.begin(), sorted.end(), [&](Vertex v) { return s.contains(v); });
}

}  // namespace

TwinCoverOutcome solve_twin_cover_detailed(const Instance& inst, const VertexSet& t) {
  const Graph& g = inst.graph;
  const std::size_t n = g.order();
  const auto k = static_cast<std::size_t>(inst.k);
  if (t.universe() != n || !is_twin_cover(g, t)) throw PreconditionError("given set is not a twin cover");

  const CliqueSetPartition part = group_clique_sets(g, t);
  const std::vector<Vertex>& cover = t.members();
  TwinCoverOutcome out;

  for_each_subset_by_size(cover.size(), cover.size(), [&](const std::vector<std::size_t>& pick) {
    ++out.p_guesses;
    VertexSet p(n);
    for (std::size_t i : pick) p.insert(cover[i]);

    std::vector<std::size_t> count(n, 0);
    auto add = [&](Vertex v) {
      ++count[v];
      for (Vertex w : g.neighbors(v)) ++count[w];
    };
    for (Vertex v : p) add(v);
    if (std::any_of(count.begin(), count.end(), [&](std::size_t c) { return c > k; })) return false;

    VertexSet base = p;
    std::vector<std::size_t> c1;
    for (std::size_t gi = 0; gi < part.groups.size(); ++gi) {
      const CliqueGroup& grp = part.groups[gi];
      if (intersects(grp.signature, p)) {
        c1.push_back(gi);
        continue;
      }
      for (const auto& clique : grp.cliques) {
        base.insert(clique.front());
        add(clique.front());
      }
    }
    if (std::any_of(count.begin(), count.end(), [&](std::size_t c) { return c > k; })) return false;

    VertexSet r_prime(n);
    for (Vertex v : cover)
      if (count[v] == 0) r_prime.insert(v);

    std::vector<std::size_t> candidates;
    for (std::size_t gi : c1)
      if (intersects(part.groups[gi].signature, r_prime)) candidates.push_back(gi);
    if (candidates.size() > kTwinCoverGroupCap) {
      throw CapExceeded("twin-cover solver: " + std::to_string(candidates.size()) +
                        " candidate clique groups exceed cap " + std::to_string(kTwinCoverGroupCap));
    }

    return for_each_subset_by_size(candidates.size(), candidates.size(), [&](const std::vector<std::size_t>& ys) {
      ++out.y_guesses;
      VertexSet s = base;
      for (std::size_t y : ys) s.insert(part.groups[candidates[y]].cliques.front().front());
      if (!is_mmds(inst, s)) return false;
      out.witness = std::move(s);
      out.accepted_p = p;
      return true;
    });
  });
  return out;
}

std::optional<VertexSet> solve_twin_cover(const Instance& inst, const VertexSet& t) {
  return solve_twin_cover_detailed(inst, t).witness;
}

}  // namespace mmds
