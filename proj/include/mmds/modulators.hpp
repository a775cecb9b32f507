#pragma once

#include <optional>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

/// N[u] == N[v]
bool true_twins(const Graph& g, Vertex u, Vertex v);

/// Every component of G - t is a clique of pairwise true twins (twins in G).
bool is_twin_cover(const Graph& g, const VertexSet& t);
/// Every component of G - d is a clique.
bool is_cluster_modulator(const Graph& g, const VertexSet& d);

/// Minimum twin cover of size <= budget, or nullopt.
///
/// A set is a twin cover iff it touches every edge whose endpoints are not
/// true twins, so this is vertex cover on the non-twin edges, solved by
/// two-way branching under iterative deepening.
std::optional<VertexSet> compute_twin_cover(const Graph& g, std::size_t budget);

/// Minimum cluster vertex deletion set of size <= budget, or nullopt.
/// Three-way branching on induced P3s under iterative deepening.
std::optional<VertexSet> compute_cluster_modulator(const Graph& g, std::size_t budget);

struct CliqueGroup {
  std::vector<Vertex> signature;              // N[clique] ∩ modulator, sorted
  std::vector<std::vector<Vertex>> cliques;   // each sorted; ordered by first vertex
};

/// Outside cliques grouped by their collective neighborhood in the modulator.
struct CliqueSetPartition {
  VertexSet modulator;
  std::vector<CliqueGroup> groups;  // sorted by signature
};

/// Throws PreconditionError if some component of G - modulator is not a clique.
CliqueSetPartition group_clique_sets(const Graph& g, const VertexSet& modulator);

}  // namespace mmds
