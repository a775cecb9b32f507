#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmds/graph.hpp"
#include "mmds/graph_io.hpp"
#include "mmds/sat.hpp"
#include "mmds/vertex_set.hpp"

namespace mmds {

/// Bipartite MMDS instance built from an exactly-one 3-CNF formula in which
/// every variable occurs at most three times; the instance with bound k is a
/// YES-instance iff the formula has an exactly-one assignment.
///
/// Vertex order (and role tags, 1-based indices):
///   per clause j        u_j y_j w_j h_j_1..h_j_{k-1} z_j_1..z_j_k
///   per variable i with both literals present
///                       b_i c_i d_i a_i_1..a_i_k f_i_1..f_i_{k-1}
///   per literal present, x_i before its negation
///                       v_i p_i q_i r_i s_i_1..s_i_k
///                       (vbar_i pbar_i qbar_i rbar_i sbar_i_l for ¬x_i)
///   pendants last       k+1 per h, z, a, f, s vertex, in support order,
///                       tagged pendant_<support id>_<1..k+1>
struct GadgetLayout {
  Instance reduced;
  CnfFormula formula;
  std::vector<std::string> roles;  // per vertex
  // Indexed by variable (entry 0 unused).
  std::vector<std::optional<Vertex>> positive, negative;      // v_i, vbar_i
  std::vector<std::optional<Vertex>> positive_p, negative_p;  // p_i, pbar_i
  std::vector<Vertex> supports;  // vertices carrying k+1 pendants
};

/// Throws PreconditionError when k < 2, the formula is not 3-CNF with at most
/// three occurrences per variable, or a clause repeats a literal.
GadgetLayout xsat_to_mmds(const CnfFormula& f, int k);

/// m(3 + (2k-1)(k+2)) + L(4 + k(k+2)) + G(3 + (2k-1)(k+2)) for m clauses,
/// L literal vertices and G variables with both literals present.
std::size_t gadget_vertex_count(const CnfFormula& f, int k);

/// "role <vertex> <tag>" comment bodies, one per vertex.
std::vector<std::string> role_comments(const GadgetLayout& layout);

/// Rebuilds a layout from a parsed graph carrying role comments. The formula
/// is recovered from the u_j neighbourhoods and the graph must then equal the
/// construction exactly; otherwise PreconditionError.
GadgetLayout layout_from_roles(const ParsedGraph& parsed);

/// The dominating set of an exactly-one assignment: the chosen literal
/// vertex of each variable, every p vertex and every pendant support.
/// Throws PreconditionError if the assignment does not satisfy the formula
/// in the exactly-one sense.
VertexSet assignment_to_solution(const GadgetLayout& layout, const Assignment& a);

inline constexpr std::size_t kGadgetEnumerationCap = 24;

/// Exact decision for instances produced by xsat_to_mmds. Every support and
/// every p vertex must be in S and b, c, d, q, r, u, y, w cannot be, so only
/// the literal vertices are open; their choices are enumerated (binary
/// counting over the variables that occur) and checked. Beyond
/// kGadgetEnumerationCap occurring variables the formula is decided by
/// xsat_search instead and the witness is built from its assignment.
/// Throws PreconditionError if the layout's graph is not the construction of
/// its formula.
std::optional<VertexSet> solve_reduced_instance(const GadgetLayout& layout);

}  // namespace mmds
