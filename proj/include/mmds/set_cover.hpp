#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace mmds {

/// Universe plus a family of subsets of it, and a size bound. Family
/// elements outside the universe are ignored.
struct SetCoverInstance {
  std::vector<int> universe;
  std::vector<std::vector<int>> family;
  std::size_t bound = 0;
};

/// Indices of a minimum-cardinality cover if its size is <= bound, else
/// nullopt. Among minimum covers, the lexicographically smallest sorted
/// index sequence is returned.
///
/// The optimum is found by branch and reduce (forced sets for elements with a
/// single candidate, dominated-set removal, include/exclude branching on a
/// largest set); the tie-break is then resolved by an ordered search at that
/// size.
std::optional<std::vector<std::size_t>> exact_set_cover(const SetCoverInstance& sc);

/// Minimum cover size, or nullopt if some element is uncoverable.
std::optional<std::size_t> minimum_cover_size(const SetCoverInstance& sc);

enum class CoverEnumeration { Accepted, Exhausted, BudgetHit };

/// Calls `visit` on every cover of size <= max_size in (size, lexicographic)
/// order until it returns true. `budget` bounds the number of search nodes;
/// BudgetHit means the enumeration stopped early without an accepted cover.
CoverEnumeration enumerate_covers(const SetCoverInstance& sc, std::size_t max_size, std::size_t budget,
                      const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace mmds
