#pragma once

// Small helpers shared by the unit tests. Test data is written with the
// 1-based vertex ids used by the file formats and converted here.

#include <initializer_list>
#include <utility>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds::test {

inline Graph g1(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  return Graph::from_edges(n, e);
}

inline VertexSet s1(std::size_t n, std::initializer_list<int> members) {
  VertexSet s(n);
  for (int v : members) s.insert(static_cast<Vertex>(v - 1));
  return s;
}

inline std::vector<Vertex> ids1(std::initializer_list<int> members) {
  std::vector<Vertex> out;
  for (int v : members) out.push_back(static_cast<Vertex>(v - 1));
  return out;
}

// Double spider: c(1) - a(2), b(3); a - a1(4), a2(5); b - b1(6), b2(7).
inline Graph double_spider() { return g1(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}}); }

}  // namespace mmds::test
