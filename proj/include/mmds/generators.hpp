#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mmds/graph.hpp"
#include "mmds/sat.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

/// Seeded source shared by all generators. Draws go through our own
/// rejection sampler instead of std::uniform_int_distribution, whose output
/// differs between standard libraries, so a seed means the same graph
/// everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Uniform attachment: vertex i > 0 joins a uniformly random earlier vertex.
Graph random_tree(std::size_t n, Rng& rng);

/// Clique on the first c vertices, independent set on the remaining n - c.
/// Every clique/independent pair is an edge with probability 1/2; an
/// independent vertex left without clique neighbours is joined to a random
/// clique vertex, so the graph is connected whenever c >= 1.
Graph random_split(std::size_t c, std::size_t n, Rng& rng);

struct ModulatedGraph {
  Graph graph;
  VertexSet modulator;
};

/// Vertices 0..d-1 form the modulator (edges among them with probability
/// 1/2); the rest is cut into cliques of size 1..max_clique. Each vertex
/// outside the modulator is joined to each modulator vertex with
/// probability attach_num/attach_den.
ModulatedGraph random_cluster(std::size_t d, std::size_t n, std::size_t max_clique, Rng& rng,
                              std::uint64_t attach_num = 1, std::uint64_t attach_den = 3);

/// Like random_cluster, but all vertices of an outside clique share one
/// random neighbourhood in the first t vertices, which makes those t
/// vertices a twin cover.
ModulatedGraph random_twin_cover(std::size_t t, std::size_t n, std::size_t max_clique, Rng& rng);

/// Random graph with maximum degree at most max_degree: `attempts` random
/// pairs are tried and kept when both endpoints still have room.
Graph random_bounded_degree(std::size_t n, std::size_t max_degree, std::size_t attempts, Rng& rng);

/// `clauses` clauses of width 1..max_width over distinct variables of
/// 1..num_vars, each literal negated with probability 1/2.
CnfFormula random_cnf(int num_vars, std::size_t clauses, std::size_t max_width, Rng& rng);

/// Like random_cnf, but no variable is used in more than three clauses; a
/// clause that cannot be filled to its drawn width is kept shorter, and
/// generation stops early once every variable is used up.
CnfFormula random_cnf_le3(int num_vars, std::size_t clauses, Rng& rng);

}  // namespace mmds
