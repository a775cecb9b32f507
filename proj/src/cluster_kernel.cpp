#include "mmds/cluster_kernel.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "mmds/error.hpp"
#include "mmds/graph_classes.hpp"
#include "mmds/oracle.hpp"
#include "mmds/subsets.hpp"

namespace mmds {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}
std::uint64_t sat_pow2(std::uint64_t e) { return e >= 64 ? kSat : std::uint64_t{1} << e; }
std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e && r != kSat; ++i) r = sat_mul(r, base);
  return r;
}

std::vector<Vertex> modulator_neighbors(const Graph& g, const VertexSet& d, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (d.contains(w)) out.push_back(w);
  return out;  // neighbors() is sorted, so this is too
}

using AttachmentClass = std::vector<std::vector<Vertex>>;

AttachmentClass attachment_class(const Graph& g, const VertexSet& d, const std::vector<Vertex>& clique) {
  AttachmentClass c;
  for (Vertex v : clique) c.push_back(modulator_neighbors(g, d, v));
  std::sort(c.begin(), c.end());
  return c;
}

bool touches(const Graph& g, Vertex v, const VertexSet& p) {
  const auto nb = g.neighbors(v);
  return std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return p.contains(w); });
}

KernelOutput restrict_to(const Instance& inst, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  KernelOutput out;
  out.reduced.graph = inst.graph.induced(keep);
  out.reduced.k = inst.k;
  out.vertex_map = std::move(keep);
  return out;
}

void check_modulator(const Graph& g, const VertexSet& d) {
  if (d.universe() != g.order() || !is_cluster_modulator(g, d))
    throw PreconditionError("given set is not a cluster modulator");
}

}  // namespace

VertexSet KernelOutput::to_reduced(const VertexSet& s) const {
  VertexSet out(vertex_map.size());
  for (Vertex r = 0; r < vertex_map.size(); ++r)
    if (s.contains(vertex_map[r])) out.insert(r);
  return out;
}

VertexSet KernelOutput::lift(const VertexSet& s, std::size_t input_order) const {
  VertexSet out(input_order);
  for (Vertex r : s) out.insert(vertex_map.at(r));
  return out;
}

KernelOutput apply_rule1(const Instance& inst, const VertexSet& d) {
  const Graph& g = inst.graph;
  check_modulator(g, d);
  std::vector<Vertex> keep(d.begin(), d.end());
  std::vector<std::pair<Vertex, Vertex>> twins;
  for (const auto& comp : components(g, &d)) {
    std::map<std::vector<Vertex>, Vertex> first;
    for (Vertex v : comp) {
      auto [it, fresh] = first.emplace(modulator_neighbors(g, d, v), v);
      if (fresh)
        keep.push_back(v);
      else
        twins.emplace_back(it->second, v);
    }
  }
  KernelOutput out = restrict_to(inst, std::move(keep));
  out.deleted_twins = std::move(twins);
  return out;
}

std::vector<CliqueTypes> classify_types(const Graph& g, const VertexSet& d, const VertexSet& p) {
  for (Vertex v : p)
    if (!d.contains(v)) throw PreconditionError("guess is not a subset of the modulator");
  const CliqueSetPartition part = group_clique_sets(g, d);
  std::vector<CliqueTypes> out(part.groups.size());
  for (std::size_t gi = 0; gi < part.groups.size(); ++gi) {
    for (const auto& clique : part.groups[gi].cliques) {
      const bool all_touch = std::all_of(clique.begin(), clique.end(), [&](Vertex v) { return touches(g, v, p); });
      (all_touch ? out[gi].type_b : out[gi].type_a).push_back(clique);
    }
  }
  return out;
}

std::optional<KernelOutput> kernelize(const Instance& inst, const VertexSet& d, const VertexSet& p) {
  const Graph& g = inst.graph;
  const auto k = static_cast<std::uint64_t>(inst.k);
  const CliqueSetPartition part = group_clique_sets(g, d);
  const std::vector<CliqueTypes> types = classify_types(g, d, p);

  std::vector<GroupStats> stats;
  std::vector<std::vector<Vertex>> removed;
  for (std::size_t gi = 0; gi < part.groups.size(); ++gi) {
    const auto i = static_cast<std::uint64_t>(part.groups[gi].signature.size());
    GroupStats st;
    st.signature = part.groups[gi].signature;
    st.type_a = types[gi].type_a.size();
    for (const auto& clique : types[gi].type_a) {
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex v) { return touches(g, v, d); })) ++st.type_a_attached;
    }
    if (st.type_a_attached > sat_mul(i, k)) return std::nullopt;

    // Cliques arrive ordered by smallest vertex, so keeping the first ones
    // deletes the highest ids.
    std::map<AttachmentClass, std::vector<std::size_t>> classes;
    for (std::size_t c = 0; c < types[gi].type_b.size(); ++c)
      classes[attachment_class(g, d, types[gi].type_b[c])].push_back(c);

    std::vector<std::size_t> unique;
    const std::uint64_t same_cap = sat_pow2(i);
    for (const auto& [cls, members] : classes) {
      if (members.size() == 1) {
        unique.push_back(members.front());
        continue;
      }
      st.type_b_same += members.size();
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j >= same_cap) removed.push_back(types[gi].type_b[members[j]]);
        if (j >= same_cap) ++st.removed_cliques;
      }
    }
    st.type_b_unique = unique.size();
    std::sort(unique.begin(), unique.end());
    const std::uint64_t unique_cap = sat_pow2(sat_pow2(sat_pow(i, i)));
    for (std::size_t j = 0; j < unique.size(); ++j) {
      if (j < unique_cap) continue;
      removed.push_back(types[gi].type_b[unique[j]]);
      ++st.removed_cliques;
    }
    stats.push_back(std::move(st));
  }

  std::vector<char> drop(g.order(), 0);
  for (const auto& clique : removed)
    for (Vertex v : clique) drop[v] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[v]) keep.push_back(v);
  KernelOutput out = restrict_to(inst, std::move(keep));
  out.deleted_cliques = std::move(removed);
  out.stats = std::move(stats);
  return out;
}

std::uint64_t kernel_size_bound(std::size_t d, int k) {
  const auto dd = static_cast<std::uint64_t>(d);
  const std::uint64_t unique_term = sat_mul(sat_pow2(sat_pow2(sat_pow(dd, dd))), sat_pow2(dd));
  const std::uint64_t inner = sat_add(sat_mul(dd, static_cast<std::uint64_t>(k)), unique_term);
  return sat_add(dd, sat_mul(sat_mul(dd, sat_pow(4, dd)), inner));
}

ClusterOutcome solve_cluster_detailed(const Instance& inst, const VertexSet& d, std::size_t cap) {
  const Graph& g = inst.graph;
  const std::size_t n = g.order();
  const auto k = static_cast<std::size_t>(inst.k);
  const KernelOutput twins = apply_rule1(inst, d);
  const Instance& base = twins.reduced;
  const VertexSet d1 = twins.to_reduced(d);
  const std::vector<Vertex>& dm = d1.members();

  ClusterOutcome out;
  out.rule1_order = base.graph.order();
  for_each_subset_by_size(dm.size(), dm.size(), [&](const std::vector<std::size_t>& pick) {
    ++out.guesses;
    VertexSet p(base.graph.order());
    for (std::size_t i : pick) p.insert(dm[i]);
    for (Vertex v = 0; v < base.graph.order(); ++v) {
      if (closed_count(base.graph, p, v) > k) {
        ++out.rejected_guesses;
        return false;
      }
    }
    const auto kern = kernelize(base, d1, p);
    if (!kern) {
      ++out.rejected_guesses;
      return false;
    }
    const std::size_t order = kern->reduced.graph.order();
    out.max_kernel_order = std::max(out.max_kernel_order, order);
    const VertexSet d2 = kern->to_reduced(d1);
    const VertexSet p2 = kern->to_reduced(p);
    if (order - d2.size() > cap || order > 64) {
      throw CapExceeded("kernel with " + std::to_string(order) + " vertices (" + std::to_string(order - d2.size()) +
                        " outside the modulator) exceeds the brute-force cap " + std::to_string(cap) +
                        "; size bound for |D| = " + std::to_string(d.size()) + ", k = " + std::to_string(inst.k) +
                        " is " + std::to_string(kernel_size_bound(d.size(), inst.k)));
    }
    VertexSet excluded(order);
    for (Vertex v : d2)
      if (!p2.contains(v)) excluded.insert(v);
    const auto found = brute_force_mmds_constrained(kern->reduced, p2, excluded, cap);
    if (!found) return false;
    VertexSet lifted = twins.lift(kern->lift(*found, base.graph.order()), n);
    if (!is_mmds(inst, lifted)) throw Error("internal: lifted kernel solution is not valid");
    out.witness = std::move(lifted);
    return true;
  });
  return out;
}

std::optional<VertexSet> solve_cluster(const Instance& inst, const VertexSet& d) {
  return solve_cluster_detailed(inst, d).witness;
}

}  // namespace mmds
