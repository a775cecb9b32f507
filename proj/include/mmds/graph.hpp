#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace mmds {

// Vertices are 0-based internally; file formats are 1-based.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph.
///
/// Construction validates the edge list (no self-loops, no duplicates, ids in
/// range) and builds sorted adjacency lists. Edges are stored normalized
/// (u < v) in lexicographic order.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on a self-loop, duplicate edge or bad id.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  const std::vector<Edge>& edges() const { return edges_; }

  /// Subgraph induced by `keep`; vertex keep[i] becomes vertex i.
  Graph induced(std::span<const Vertex> keep) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// A graph with its membership bound k (k >= 1).
struct Instance {
  Graph graph;
  int k = 1;

  bool operator==(const Instance&) const = default;
};

/// Closed neighborhoods as 64-bit masks. Requires order() <= 64.
std::vector<std::uint64_t> closed_neighborhood_masks(const Graph& g);

// Named small graphs, handy in tests and generators.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center is vertex 0

}  // namespace mmds
