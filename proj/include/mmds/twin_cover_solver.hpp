#pragma once

#include <cstddef>
#include <optional>

#include "mmds/graph.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

/// Groups of outside cliques that may be chosen to dominate the still
/// undominated part of the twin cover; more than this many raises CapExceeded.
inline constexpr std::size_t kTwinCoverGroupCap = 30;

struct TwinCoverOutcome {
  std::optional<VertexSet> witness;
  std::optional<VertexSet> accepted_p;  // S ∩ T of the accepted guess
  std::size_t p_guesses = 0;            // guesses of S ∩ T that were examined
  std::size_t y_guesses = 0;            // group subsets tried over all P
};

/// Exact decision given a twin cover t. For every guess P = S ∩ T (by size,
/// then lexicographic), cliques with no neighbour in P receive their smallest
/// vertex; then subsets of the remaining groups that touch undominated cover
/// vertices are tried, one smallest vertex per group.
///
/// Throws PreconditionError if t is not a twin cover of the graph.
TwinCoverOutcome solve_twin_cover_detailed(const Instance& inst, const VertexSet& t);

std::optional<VertexSet> solve_twin_cover(const Instance& inst, const VertexSet& t);

}  // namespace mmds
