#include "mmds/graph_classes.hpp"

#include <algorithm>
#include <numeric>

namespace mmds {

std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet* removed) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || (removed && removed->contains(s))) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w] && !(removed && removed->contains(w))) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_split_partition(const Graph& g, const SplitPartition& part) {
  const std::size_t n = g.order();
  if (part.clique.universe() != n || part.independent.universe() != n) return false;
  if (part.clique.size() + part.independent.size() != n) return false;
  for (Vertex v : part.clique) {
    if (part.independent.contains(v)) return false;
  }
  std::size_t clique_edges = 0;
  for (auto [u, v] : g.edges()) {
    if (part.independent.contains(u) && part.independent.contains(v)) return false;
    if (part.clique.contains(u) && part.clique.contains(v)) ++clique_edges;
  }
  const std::size_t c = part.clique.size();
  return clique_edges == c * (c ? c - 1 : 0) / 2;
}

namespace {

SplitPartition partition_from_clique(std::size_t n, std::vector<Vertex> clique) {
  std::sort(clique.begin(), clique.end());
  VertexSet c(n, clique);
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!c.contains(v)) rest.push_back(v);
  }
  return {std::move(c), VertexSet(n, rest)};
}

}  // namespace

std::optional<SplitPartition> recognize_split(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return SplitPartition{VertexSet(0), VertexSet(0)};

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  // omega = max{ i : d_i >= i - 1 } with 1-based positions.
  std::size_t omega = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(order[i]) >= i) omega = i + 1;
  }
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < omega ? head : tail) += g.degree(order[i]);
  if (head != omega * (omega - 1) + tail) return std::nullopt;

  std::vector<Vertex> base(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(omega));
  auto best = partition_from_clique(n, base);
  if (!is_split_partition(g, best)) return std::nullopt;

  // Every other maximum clique swaps exactly one vertex of `base` for one
  // vertex outside it.
  const VertexSet& k0 = best.clique;
  std::vector<Vertex> best_list = k0.members();
  for (Vertex y = 0; y < n; ++y) {
    if (k0.contains(y)) continue;
    std::size_t hits = 0;
    for (Vertex w : g.neighbors(y)) hits += k0.contains(w) ? 1 : 0;
    if (hits + 1 < omega) continue;
    for (Vertex x : k0) {
      if (g.adjacent(x, y)) continue;
      std::vector<Vertex> cand;
      for (Vertex v : k0) {
        if (v != x) cand.push_back(v);
      }
      cand.push_back(y);
      std::sort(cand.begin(), cand.end());
      if (!(cand < best_list)) continue;
      auto part = partition_from_clique(n, cand);
      if (is_split_partition(g, part)) {
        best_list = cand;
        best = std::move(part);
      }
    }
  }
  return best;
}

}  // namespace mmds
