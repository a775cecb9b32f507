#include "mmds/modulators.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "mmds/error.hpp"
#include "mmds/graph_classes.hpp"

namespace mmds {

bool true_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  if (!g.adjacent(u, v)) return false;
  // N[u] = N[v] with u~v  <=>  N(u) - v = N(v) - u
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  if (nu.size() != nv.size()) return false;
  std::size_t i = 0, j = 0;
  while (i < nu.size() || j < nv.size()) {
    if (i < nu.size() && nu[i] == v) {
      ++i;
      continue;
    }
    if (j < nv.size() && nv[j] == u) {
      ++j;
      continue;
    }
    if (i == nu.size() || j == nv.size() || nu[i] != nv[j]) return false;
    ++i;
    ++j;
  }
  return true;
}

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) return false;
  return true;
}

}  // namespace

bool is_cluster_modulator(const Graph& g, const VertexSet& d) {
  for (const auto& comp : components(g, &d)) {
    if (!is_clique(g, comp)) return false;
  }
  return true;
}

bool is_twin_cover(const Graph& g, const VertexSet& t) {
  for (auto [u, v] : g.edges()) {
    if (!t.contains(u) && !t.contains(v) && !true_twins(g, u, v)) return false;
  }
  return true;
}

namespace {

bool cover_edges(const std::vector<Edge>& edges, std::vector<char>& chosen, std::size_t budget,
                 std::vector<Vertex>& picked) {
  auto open = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return !chosen[e.first] && !chosen[e.second]; });
  if (open == edges.end()) return true;
  if (budget == 0) return false;
  for (Vertex v : {open->first, open->second}) {
    chosen[v] = 1;
    picked.push_back(v);
    if (cover_edges(edges, chosen, budget - 1, picked)) return true;
    picked.pop_back();
    chosen[v] = 0;
  }
  return false;
}

// Induced P3 a-b-c (b the center) among vertices not deleted.
std::optional<std::tuple<Vertex, Vertex, Vertex>> find_p3(const Graph& g, const std::vector<char>& deleted) {
  for (Vertex b = 0; b < g.order(); ++b) {
    if (deleted[b]) continue;
    auto nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (deleted[nb[i]]) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (deleted[nb[j]]) continue;
        if (!g.adjacent(nb[i], nb[j])) return std::make_tuple(nb[i], b, nb[j]);
      }
    }
  }
  return std::nullopt;
}

bool delete_p3s(const Graph& g, std::vector<char>& deleted, std::size_t budget, std::vector<Vertex>& picked) {
  auto p3 = find_p3(g, deleted);
  if (!p3) return true;
  if (budget == 0) return false;
  auto [a, b, c] = *p3;
  for (Vertex v : {a, b, c}) {
    deleted[v] = 1;
    picked.push_back(v);
    if (delete_p3s(g, deleted, budget - 1, picked)) return true;
    picked.pop_back();
    deleted[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> compute_twin_cover(const Graph& g, std::size_t budget) {
  std::vector<Edge> non_twin;
  for (const Edge& e : g.edges()) {
    if (!true_twins(g, e.first, e.second)) non_twin.push_back(e);
  }
  for (std::size_t b = 0; b <= budget; ++b) {
    std::vector<char> chosen(g.order(), 0);
    std::vector<Vertex> picked;
    if (cover_edges(non_twin, chosen, b, picked)) {
      VertexSet t(g.order(), picked);
      if (!is_twin_cover(g, t)) throw Error("internal: twin cover verification failed");
      return t;
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> compute_cluster_modulator(const Graph& g, std::size_t budget) {
  for (std::size_t b = 0; b <= budget; ++b) {
    std::vector<char> deleted(g.order(), 0);
    std::vector<Vertex> picked;
    if (delete_p3s(g, deleted, b, picked)) {
      VertexSet d(g.order(), picked);
      if (!is_cluster_modulator(g, d)) throw Error("internal: cluster modulator verification failed");
      return d;
    }
  }
  return std::nullopt;
}

CliqueSetPartition group_clique_sets(const Graph& g, const VertexSet& modulator) {
  std::map<std::vector<Vertex>, std::vector<std::vector<Vertex>>> by_signature;
  std::size_t covered = 0;
  for (auto& comp : components(g, &modulator)) {
    if (!is_clique(g, comp)) {
      throw PreconditionError("component containing vertex " + std::to_string(comp.front() + 1) +
                              " of G minus the modulator is not a clique");
    }
    std::vector<Vertex> sig;
    for (Vertex v : comp)
      for (Vertex w : g.neighbors(v))
        if (modulator.contains(w)) sig.push_back(w);
    std::sort(sig.begin(), sig.end());
    sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
    covered += comp.size();
    by_signature[std::move(sig)].push_back(std::move(comp));
  }
  if (covered + modulator.size() != g.order()) throw Error("internal: clique sets do not cover V minus modulator");

  CliqueSetPartition out{modulator, {}};
  for (auto& [sig, cliques] : by_signature) out.groups.push_back({sig, std::move(cliques)});
  return out;
}

}  // namespace mmds
