#include "mmds/generators.hpp"

#include <algorithm>
#include <set>

#include "mmds/error.hpp"

namespace mmds {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw PreconditionError("empty range in Rng::uniform");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return engine_();
  const std::uint64_t range = span + 1;
  while (true) {
    const std::uint64_t x = engine_();
    const std::uint64_t r = x % range;
    // reject draws from the last, incomplete block of size `range`
    if (x - r <= ~std::uint64_t{0} - span) return lo + r;
  }
}

Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(n ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(rng.uniform(0, i - 1)), static_cast<Vertex>(i));
  return Graph::from_edges(n, edges);
}

Graph random_split(std::size_t c, std::size_t n, Rng& rng) {
  if (c > n) throw PreconditionError("clique larger than the graph");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < c; ++a)
    for (Vertex b = a + 1; b < c; ++b) edges.emplace_back(a, b);
  for (auto v = static_cast<Vertex>(c); v < n; ++v) {
    bool any = false;
    for (Vertex a = 0; a < c; ++a) {
      if (rng.chance(1, 2)) {
        edges.emplace_back(a, v);
        any = true;
      }
    }
    if (!any && c > 0) edges.emplace_back(static_cast<Vertex>(rng.uniform(0, c - 1)), v);
  }
  return Graph::from_edges(n, edges);
}

namespace {

// Consecutive blocks of sizes 1..max_clique covering [first, n).
std::vector<std::pair<Vertex, Vertex>> clique_blocks(std::size_t first, std::size_t n, std::size_t max_clique,
                                                     Rng& rng) {
  if (max_clique == 0) throw PreconditionError("max clique size must be positive");
  std::vector<std::pair<Vertex, Vertex>> blocks;
  std::size_t at = first;
  while (at < n) {
    const std::size_t size = std::min<std::size_t>(rng.uniform(1, max_clique), n - at);
    blocks.emplace_back(static_cast<Vertex>(at), static_cast<Vertex>(at + size));
    at += size;
  }
  return blocks;
}

void modulator_edges(std::size_t d, Rng& rng, std::vector<Edge>& edges) {
  for (Vertex a = 0; a < d; ++a)
    for (Vertex b = a + 1; b < d; ++b)
      if (rng.chance(1, 2)) edges.emplace_back(a, b);
}

VertexSet prefix_set(std::size_t d, std::size_t n) {
  VertexSet s(n);
  for (Vertex v = 0; v < d; ++v) s.insert(v);
  return s;
}

}  // namespace

ModulatedGraph random_cluster(std::size_t d, std::size_t n, std::size_t max_clique, Rng& rng,
                              std::uint64_t attach_num, std::uint64_t attach_den) {
  if (d > n) throw PreconditionError("modulator larger than the graph");
  std::vector<Edge> edges;
  modulator_edges(d, rng, edges);
  for (auto [lo, hi] : clique_blocks(d, n, max_clique, rng)) {
    for (Vertex a = lo; a < hi; ++a) {
      for (Vertex b = a + 1; b < hi; ++b) edges.emplace_back(a, b);
      for (Vertex m = 0; m < d; ++m)
        if (rng.chance(attach_num, attach_den)) edges.emplace_back(m, a);
    }
  }
  return {Graph::from_edges(n, edges), prefix_set(d, n)};
}

ModulatedGraph random_twin_cover(std::size_t t, std::size_t n, std::size_t max_clique, Rng& rng) {
  if (t > n) throw PreconditionError("twin cover larger than the graph");
  std::vector<Edge> edges;
  modulator_edges(t, rng, edges);
  for (auto [lo, hi] : clique_blocks(t, n, max_clique, rng)) {
    std::vector<Vertex> attach;
    for (Vertex m = 0; m < t; ++m)
      if (rng.chance(1, 2)) attach.push_back(m);
    for (Vertex a = lo; a < hi; ++a) {
      for (Vertex b = a + 1; b < hi; ++b) edges.emplace_back(a, b);
      for (Vertex m : attach) edges.emplace_back(m, a);
    }
  }
  return {Graph::from_edges(n, edges), prefix_set(t, n)};
}

Graph random_bounded_degree(std::size_t n, std::size_t max_degree, std::size_t attempts, Rng& rng) {
  std::set<Edge> edges;
  std::vector<std::size_t> deg(n, 0);
  if (n < 2) return Graph::from_edges(n, std::vector<Edge>{});
  for (std::size_t i = 0; i < attempts; ++i) {
    auto a = static_cast<Vertex>(rng.uniform(0, n - 1));
    auto b = static_cast<Vertex>(rng.uniform(0, n - 1));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (deg[a] >= max_degree || deg[b] >= max_degree || edges.count({a, b})) continue;
    edges.insert({a, b});
    ++deg[a];
    ++deg[b];
  }
  return Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end()));
}

namespace {

CnfFormula draw_cnf(int num_vars, std::size_t clauses, std::size_t max_width, std::size_t max_occurrences,
                    Rng& rng) {
  if (num_vars < 1 || max_width < 1) throw PreconditionError("need at least one variable and width 1");
  CnfFormula f;
  f.num_vars = num_vars;
  std::vector<std::size_t> used(static_cast<std::size_t>(num_vars) + 1, 0);
  for (std::size_t j = 0; j < clauses; ++j) {
    std::vector<int> avail;
    for (int v = 1; v <= num_vars; ++v)
      if (used[static_cast<std::size_t>(v)] < max_occurrences) avail.push_back(v);
    if (avail.empty()) break;
    const std::size_t width = std::min<std::size_t>(rng.uniform(1, max_width), avail.size());
    std::vector<int> clause;
    for (std::size_t l = 0; l < width; ++l) {
      const std::size_t at = rng.uniform(l, avail.size() - 1);
      std::swap(avail[l], avail[at]);
      ++used[static_cast<std::size_t>(avail[l])];
      clause.push_back(rng.chance(1, 2) ? -avail[l] : avail[l]);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace

CnfFormula random_cnf(int num_vars, std::size_t clauses, std::size_t max_width, Rng& rng) {
  return draw_cnf(num_vars, clauses, max_width, ~std::size_t{0}, rng);
}

CnfFormula random_cnf_le3(int num_vars, std::size_t clauses, Rng& rng) { return draw_cnf(num_vars, clauses, 3, 3, rng); }

}  // namespace mmds
