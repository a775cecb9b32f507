#include "mmds/oracle.hpp"

#include <bit>
#include <string>

#include "mmds/error.hpp"

namespace mmds {

MembershipReport check_membership(const Instance& inst, const VertexSet& s) {
  const Graph& g = inst.graph;
  if (s.universe() != g.order()) throw PreconditionError("vertex set universe does not match graph order");
  MembershipReport rep;
  rep.counts.assign(g.order(), 0);
  for (Vertex v : s) {
    ++rep.counts[v];
    for (Vertex w : g.neighbors(v)) ++rep.counts[w];
  }
  rep.valid = true;
  const auto k = static_cast<std::size_t>(inst.k);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (rep.counts[v] < 1 || rep.counts[v] > k) {
      rep.valid = false;
      rep.first_violation = {v, rep.counts[v]};
      break;
    }
  }
  return rep;
}

bool is_mmds(const Instance& inst, const VertexSet& s) { return check_membership(inst, s).valid; }

namespace {

// Next subset with the same popcount in increasing numeric order (Gosper).
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

std::optional<VertexSet> brute_force_mmds_constrained(const Instance& inst, const VertexSet& forced_in,
                                                      const VertexSet& forced_out, std::size_t cap) {
  const Graph& g = inst.graph;
  const std::size_t n = g.order();
  if (n > 64) throw CapExceeded("brute force supports at most 64 vertices, got " + std::to_string(n));

  std::vector<Vertex> free;
  std::uint64_t base = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (forced_in.contains(v)) {
      if (forced_out.contains(v)) return std::nullopt;
      base |= std::uint64_t{1} << v;
    } else if (!forced_out.contains(v)) {
      free.push_back(v);
    }
  }
  if (free.size() > cap || cap > 64) {
    throw CapExceeded("brute force over " + std::to_string(free.size()) + " free vertices exceeds cap " +
                      std::to_string(cap));
  }

  const auto masks = closed_neighborhood_masks(g);
  const auto k = static_cast<int>(inst.k);
  auto valid = [&](std::uint64_t s) {
    for (Vertex v = 0; v < n; ++v) {
      const int c = std::popcount(masks[v] & s);
      if (c < 1 || c > k) return false;
    }
    return true;
  };
  auto expand = [&](std::uint64_t sub) {
    std::uint64_t s = base;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (sub >> i & 1) s |= std::uint64_t{1} << free[i];
    return s;
  };

  const std::size_t f = free.size();
  for (std::size_t pop = 0; pop <= f; ++pop) {
    if (pop == 0) {
      if (valid(base)) return VertexSet::from_mask(n, base);
      continue;
    }
    const std::uint64_t limit = f == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f) - 1;
    std::uint64_t sub = (pop == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << pop) - 1;
    while (true) {
      const std::uint64_t s = expand(sub);
      if (valid(s)) return VertexSet::from_mask(n, s);
      if (sub == (limit & ~((std::uint64_t{1} << (f - pop)) - 1))) break;  // highest rank reached
      sub = next_same_popcount(sub);
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> brute_force_mmds(const Instance& inst, std::size_t cap) {
  const std::size_t n = inst.graph.order();
  if (n > cap) throw CapExceeded("brute force refused: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  return brute_force_mmds_constrained(inst, VertexSet(n), VertexSet(n), cap);
}

std::optional<VertexSet> low_degree_fast_path(const Instance& inst) {
  const Graph& g = inst.graph;
  const std::size_t n = g.order();
  const auto k = static_cast<std::size_t>(inst.k);
  const std::size_t delta = g.max_degree();
  if (delta > k) return std::nullopt;

  VertexSet s(n);
  if (delta + 1 <= k) {
    for (Vertex v = 0; v < n; ++v) s.insert(v);
    return s;
  }
  std::vector<std::size_t> count(n, 0);
  auto add = [&](Vertex v) {
    s.insert(v);
    ++count[v];
    for (Vertex w : g.neighbors(v)) ++count[w];
  };
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 <= k) add(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (count[v] == 0) add(v);
  }
  return s;
}

}  // namespace mmds
