#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;     // parent[root] == root
  std::vector<std::size_t> child_offset;  // children of u: child_list[child_offset[u] .. child_offset[u+1])
  std::vector<Vertex> child_list;
  std::vector<Vertex> post_order; // children before parents

  std::size_t order() const { return parent.size(); }
  std::span<const Vertex> children(Vertex u) const {
    return {child_list.data() + child_offset[u], child_offset[u + 1] - child_offset[u]};
  }
  bool is_leaf(Vertex u) const { return child_offset[u] == child_offset[u + 1]; }
};

/// Throws PreconditionError if g is not a tree or r is out of range.
RootedTree root_tree(const Graph& g, Vertex r = 0);

/// Per-node flags of the subtree G_u rooted at u:
///   mplus   some valid S_u contains u
///   mminus  some valid S_u avoids u
///   m       mplus || mminus
///   mprime  mminus is false only because u itself ends up undominated
/// plus the gate values p/q/rr (at most k / at most k-1 "forced" children,
/// and the parent-side slack test), evaluated on the finalized flags.
struct TreeNodeState {
  bool mplus = false;
  bool mminus = false;
  bool m = false;
  bool mprime = false;
  bool p = false;
  bool q = false;
  bool rr = false;
};

struct TreeDpState {
  std::vector<TreeNodeState> nodes;
  // feasible[u][x][y]: G_u admits S_u with [u in S_u] == x such that every
  // proper descendant of u is satisfied and u is satisfied once the parent's
  // membership y is added to its count.
  std::vector<std::array<std::array<bool, 2>, 2>> feasible;
};

/// Exact bottom-up DP. Each node keeps the four feasibility bits above; a
/// node combines its children through the number of children it can force
/// into S (range [forced_in, forced_in + flexible]), so one pass is O(n).
TreeDpState dp_compute(const RootedTree& t, int k);

/// The four-flag recurrence taken literally (M-, M', M+ with the A·B·C
/// grandchild rescue). It is not exact: on the path 1-2-3-4 with k = 1 it
/// reports no solution although {1, 4} is one, because its "forced child"
/// proxy (M-(v) = 0 and M'(v) = 0) is not the same as "v must be in S".
/// Kept for comparison tests; the solver uses dp_compute.
TreeDpState dp_compute_literal(const RootedTree& t, int k);

/// M(root) of dp_compute. Throws PreconditionError if the graph is not a tree.
bool solve_tree(const Instance& inst);

/// A witness read back from the dp_compute table (top-down, taking the
/// fewest children into S that the count window allows), or nullopt.
std::optional<VertexSet> tree_witness(const Instance& inst);

}  // namespace mmds
