#include "mmds/graph.hpp"

#include <algorithm>
#include <string>

#include "mmds/error.hpp"

namespace mmds {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw PreconditionError("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                              "} has a vertex outside 1.." + std::to_string(n));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u + 1));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw PreconditionError("duplicate edge {" + std::to_string(dup->first + 1) + "," +
                            std::to_string(dup->second + 1) + "}");
  }
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::int64_t> remap(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> sub;
  for (auto [u, v] : edges_) {
    if (remap[u] >= 0 && remap[v] >= 0) {
      sub.emplace_back(static_cast<Vertex>(remap[u]), static_cast<Vertex>(remap[v]));
    }
  }
  return from_edges(keep.size(), sub);
}

std::vector<std::uint64_t> closed_neighborhood_masks(const Graph& g) {
  if (g.order() > 64) throw CapExceeded("closed-neighborhood masks need at most 64 vertices");
  std::vector<std::uint64_t> masks(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    masks[v] = std::uint64_t{1} << v;
    for (Vertex w : g.neighbors(v)) masks[v] |= std::uint64_t{1} << w;
  }
  return masks;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  if (n >= 3) e.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

}  // namespace mmds
