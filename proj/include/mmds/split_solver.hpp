#pragma once

#include <cstddef>
#include <optional>

#include "mmds/graph.hpp"
#include "mmds/graph_classes.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

enum class SplitRoute {
  SmallClique,  // |C| <= k: C plus the independent vertices without clique neighbours
  GuessIndependent,  // |I| <= n/2: guess S ∩ I, complete with a set cover of the rest
  GuessClique,  // |I| > n/2: guess S ∩ C with at most k vertices
};

struct SplitOutcome {
  std::optional<VertexSet> witness;
  SplitRoute route = SplitRoute::SmallClique;
  std::size_t guesses = 0;
  // For an accepted GuessIndependent witness: x = max_{p in C} |N(p) ∩ S_I|
  // and |S_C|, which never exceeds k - x.
  std::size_t x = 0;
  std::size_t clique_part = 0;
};

/// Per-guess cap on the number of covers tried when the minimum cover fails
/// the final membership check.
inline constexpr std::size_t kSplitCoverBudget = 1'000'000;

/// Exact decision on a connected split graph. The guess order is by subset
/// size, then lexicographic on the sorted vertex ids of the guessed side, so
/// the returned witness is reproducible.
///
/// Throws PreconditionError if `part` is not a split partition of the graph
/// or the graph is disconnected, and CapExceeded if the guessed side has more
/// than 62 vertices or the cover budget runs out.
SplitOutcome solve_split_detailed(const Instance& inst, const SplitPartition& part,
                                  std::size_t cover_budget = kSplitCoverBudget);

std::optional<VertexSet> solve_split(const Instance& inst, const SplitPartition& part);

}  // namespace mmds
