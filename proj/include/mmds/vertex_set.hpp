#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mmds/graph.hpp"

namespace mmds {

/// Subset of the vertices 0..n-1 of some graph.
///
/// Members are kept sorted; a byte map gives O(1) membership tests.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : mask_(n, 0) {}

  /// Throws PreconditionError on out-of-range ids or duplicates.
  VertexSet(std::size_t n, std::span<const Vertex> members);
  VertexSet(std::size_t n, std::initializer_list<Vertex> members)
      : VertexSet(n, std::span<const Vertex>(members.begin(), members.size())) {}

  /// Members of a 64-bit mask (bit i = vertex i).
  static VertexSet from_mask(std::size_t n, std::uint64_t mask);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const { return v < mask_.size() && mask_[v] != 0; }

  /// Adds v if absent.
  void insert(Vertex v);

  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet& other) const {
    return members_ == other.members_ && universe() == other.universe();
  }

 private:
  std::vector<Vertex> members_;
  std::vector<unsigned char> mask_;
};

/// |N[v] ∩ s|
std::size_t closed_count(const Graph& g, const VertexSet& s, Vertex v);

}  // namespace mmds
