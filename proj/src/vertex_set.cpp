#include "mmds/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "mmds/error.hpp"

namespace mmds {

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> members) : mask_(n, 0) {
  members_.reserve(members.size());
  for (Vertex v : members) {
    if (v >= n) throw PreconditionError("vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(n));
    if (mask_[v]) throw PreconditionError("vertex " + std::to_string(v + 1) + " listed twice");
    mask_[v] = 1;
    members_.push_back(v);
  }
  std::sort(members_.begin(), members_.end());
}

VertexSet VertexSet::from_mask(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n && v < 64; ++v) {
    if (mask >> v & 1) {
      s.mask_[v] = 1;
      s.members_.push_back(v);
    }
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= mask_.size()) throw PreconditionError("vertex " + std::to_string(v + 1) + " out of range");
  if (mask_[v]) return;
  mask_[v] = 1;
  members_.insert(std::upper_bound(members_.begin(), members_.end(), v), v);
}

std::size_t closed_count(const Graph& g, const VertexSet& s, Vertex v) {
  std::size_t c = s.contains(v) ? 1 : 0;
  for (Vertex w : g.neighbors(v)) c += s.contains(w) ? 1 : 0;
  return c;
}

}  // namespace mmds
