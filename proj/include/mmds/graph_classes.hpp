#pragma once

#include <optional>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

bool is_connected(const Graph& g);
/// Connected and m = n - 1.
bool is_tree(const Graph& g);

/// Connected components of G - removed, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet* removed = nullptr);

/// Proper 2-coloring (0/1 per vertex) if the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// V = clique ⊎ independent, clique complete, independent edgeless.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

bool is_split_partition(const Graph& g, const SplitPartition& part);

/// A split partition with a maximum clique, ties broken by the
/// lexicographically smallest sorted clique vertex list; nullopt if g is not
/// split. Degree-sequence test (Hammer–Simeone) plus explicit verification.
std::optional<SplitPartition> recognize_split(const Graph& g);

}  // namespace mmds
