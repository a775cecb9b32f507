#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/modulators.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

struct GroupStats {
  std::vector<Vertex> signature;  // in the ids of the graph the group was computed on
  std::size_t type_a = 0;
  // Type-A cliques in which every vertex has a neighbour in the modulator.
  std::size_t type_a_attached = 0;
  // Type-B cliques whose attachment class occurs more than once in the group.
  std::size_t type_b_same = 0;
  std::size_t type_b_unique = 0;
  std::size_t removed_cliques = 0;
};

/// A reduced instance together with the bookkeeping needed to map a solution
/// back. All ids in deleted_twins / deleted_cliques are ids of the input graph.
struct KernelOutput {
  Instance reduced;
  std::vector<Vertex> vertex_map;  // reduced id -> input id
  std::vector<std::pair<Vertex, Vertex>> deleted_twins;  // (kept, deleted)
  std::vector<std::vector<Vertex>> deleted_cliques;
  std::vector<GroupStats> stats;

  /// The modulator (or any input-id set) expressed in reduced ids; members
  /// that were deleted are dropped.
  VertexSet to_reduced(const VertexSet& s) const;
  /// A reduced-id set expressed in input ids.
  VertexSet lift(const VertexSet& s, std::size_t input_order) const;
};

/// Inside every clique of G - d, keeps only the smallest vertex of each
/// family of true twins (vertices of one clique with the same neighbourhood
/// in d). Throws PreconditionError if d is not a cluster modulator.
KernelOutput apply_rule1(const Instance& inst, const VertexSet& d);

struct CliqueTypes {
  std::vector<std::vector<Vertex>> type_a;  // some vertex has no neighbour in p
  std::vector<std::vector<Vertex>> type_b;  // every vertex has a neighbour in p
};

/// One entry per group of group_clique_sets(g, d), in the same order.
std::vector<CliqueTypes> classify_types(const Graph& g, const VertexSet& d, const VertexSet& p);

/// Per-guess reduction for S ∩ d = p on a graph to which Rule 1 was applied:
///  * rejects the guess (nullopt) when some group with |signature| = i has
///    more than i·k Type-A cliques whose vertices all touch d, since each of
///    them puts a vertex of S next to the signature;
///  * keeps at most 2^i Type-B cliques per attachment class that occurs more
///    than once in a group, deleting the highest ids first;
///  * keeps at most 2^(2^(i^i)) Type-B cliques with a unique attachment class
///    (saturating, so the cap is inert beyond 2^63).
/// The attachment class of a clique is the sorted multiset of its vertices'
/// neighbourhoods in d.
std::optional<KernelOutput> kernelize(const Instance& inst, const VertexSet& d, const VertexSet& p);

/// |D| + |D|·4^|D|·(|D|·k + 2^(2^(|D|^|D|))·2^|D|), saturating at UINT64_MAX.
std::uint64_t kernel_size_bound(std::size_t d, int k);

struct ClusterOutcome {
  std::optional<VertexSet> witness;
  std::size_t guesses = 0;
  std::size_t rejected_guesses = 0;  // by the Type-A count or a P-overload
  std::size_t rule1_order = 0;       // order after Rule 1
  std::size_t max_kernel_order = 0;  // largest per-guess kernel
};

/// Exact decision given a cluster modulator d: Rule 1 once, then for every
/// guess p ⊆ d (by size, then lexicographic) the per-guess kernel is searched
/// exhaustively for a solution with S ∩ d = p, and the first one found is
/// lifted back. Throws PreconditionError for an invalid modulator and
/// CapExceeded when a kernel leaves more than `cap` free vertices.
ClusterOutcome solve_cluster_detailed(const Instance& inst, const VertexSet& d, std::size_t cap = 24);

std::optional<VertexSet> solve_cluster(const Instance& inst, const VertexSet& d);

}  // namespace mmds
