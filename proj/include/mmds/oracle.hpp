#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

struct MembershipReport {
  bool valid = false;
  std::vector<std::size_t> counts;  // |N[v] ∩ S| per vertex
  // Smallest vertex whose count falls outside [1, k].
  std::optional<std::pair<Vertex, std::size_t>> first_violation;
};

/// Evaluates 1 <= |N[v] ∩ s| <= k for every vertex.
MembershipReport check_membership(const Instance& inst, const VertexSet& s);
bool is_mmds(const Instance& inst, const VertexSet& s);

inline constexpr std::size_t kDefaultBruteForceCap = 24;

/// First valid set in (popcount, numeric rank) order, or nullopt.
/// Throws CapExceeded when n > cap (cap is at most 64).
std::optional<VertexSet> brute_force_mmds(const Instance& inst, std::size_t cap = kDefaultBruteForceCap);

/// As brute_force_mmds, restricted to sets containing every vertex of
/// `forced_in` and none of `forced_out`; the cap applies to the free vertices.
std::optional<VertexSet> brute_force_mmds_constrained(const Instance& inst, const VertexSet& forced_in,
                                                      const VertexSet& forced_out,
                                                      std::size_t cap = kDefaultBruteForceCap);

/// Constructive answer for Δ(G) <= k:
///   Δ <= k-1  -> V
///   Δ == k    -> all vertices of degree <= k-1, then the smallest undominated
///                vertex repeatedly until everything is dominated
///   Δ  > k    -> nullopt (no claim)
std::optional<VertexSet> low_degree_fast_path(const Instance& inst);

}  // namespace mmds
