#include "mmds/gadget.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "mmds/error.hpp"
#include "mmds/oracle.hpp"

namespace mmds {

namespace {

std::string tag(const std::string& name, std::size_t i) { return name + "_" + std::to_string(i); }
std::string tag(const std::string& name, std::size_t i, std::size_t l) { return tag(name, i) + "_" + std::to_string(l); }

void check_formula(const CnfFormula& f, int k) {
  if (k < 2) throw PreconditionError("the gadget construction needs k >= 2");
  validate(f);
  if (!is_3cnf_le3(f))
    throw PreconditionError("formula must have at most 3 literals per clause and 3 occurrences per variable");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    auto c = f.clauses[j];
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw PreconditionError("clause " + std::to_string(j + 1) + " repeats a literal");
  }
}

struct Builder {
  std::vector<std::string> roles;
  std::vector<Edge> edges;
  std::vector<Vertex> supports;

  Vertex add(std::string role) {
    roles.push_back(std::move(role));
    return static_cast<Vertex>(roles.size() - 1);
  }
  void link(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  Vertex support(std::string role) {
    const Vertex v = add(std::move(role));
    supports.push_back(v);
    return v;
  }
};

}  // namespace

std::size_t gadget_vertex_count(const CnfFormula& f, int k) {
  const auto kk = static_cast<std::size_t>(k);
  std::vector<char> pos(static_cast<std::size_t>(f.num_vars) + 1, 0), neg(pos);
  for (const auto& c : f.clauses)
    for (int lit : c) (lit > 0 ? pos : neg)[static_cast<std::size_t>(std::abs(lit))] = 1;
  std::size_t literals = 0, both = 0;
  for (std::size_t v = 1; v < pos.size(); ++v) {
    literals += static_cast<std::size_t>(pos[v] + neg[v]);
    both += (pos[v] && neg[v]) ? 1 : 0;
  }
  const std::size_t block = 3 + (2 * kk - 1) * (kk + 2);
  return f.clauses.size() * block + literals * (4 + kk * (kk + 2)) + both * block;
}

GadgetLayout xsat_to_mmds(const CnfFormula& f, int k) {
  check_formula(f, k);
  const auto kk = static_cast<std::size_t>(k);
  const auto nv = static_cast<std::size_t>(f.num_vars);
  GadgetLayout out;
  out.formula = f;
  out.positive.assign(nv + 1, std::nullopt);
  out.negative = out.positive_p = out.negative_p = out.positive;

  std::vector<char> has_pos(nv + 1, 0), has_neg(nv + 1, 0);
  for (const auto& c : f.clauses)
    for (int lit : c) (lit > 0 ? has_pos : has_neg)[static_cast<std::size_t>(std::abs(lit))] = 1;

  Builder b;
  std::vector<Vertex> u(f.clauses.size()), w(f.clauses.size());
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const std::size_t id = j + 1;
    u[j] = b.add(tag("u", id));
    const Vertex y = b.add(tag("y", id));
    w[j] = b.add(tag("w", id));
    b.link(u[j], y);
    for (std::size_t l = 1; l < kk; ++l) b.link(w[j], b.support(tag("h", id, l)));
    for (std::size_t l = 1; l <= kk; ++l) b.link(y, b.support(tag("z", id, l)));
  }

  struct PendingGadget {
    std::size_t var;
    Vertex c, d;
  };
  std::vector<PendingGadget> gadgets;
  for (std::size_t i = 1; i <= nv; ++i) {
    if (!has_pos[i] || !has_neg[i]) continue;
    const Vertex bv = b.add(tag("b", i));
    const Vertex cv = b.add(tag("c", i));
    const Vertex dv = b.add(tag("d", i));
    b.link(cv, bv);
    for (std::size_t l = 1; l <= kk; ++l) b.link(bv, b.support(tag("a", i, l)));
    for (std::size_t l = 1; l < kk; ++l) b.link(dv, b.support(tag("f", i, l)));
    gadgets.push_back({i, cv, dv});
  }

  for (std::size_t i = 1; i <= nv; ++i) {
    for (int sign : {1, -1}) {
      if (!(sign > 0 ? has_pos[i] : has_neg[i])) continue;
      const std::string bar = sign > 0 ? "" : "bar";
      const Vertex v = b.add(tag("v" + bar, i));
      const Vertex p = b.add(tag("p" + bar, i));
      const Vertex q = b.add(tag("q" + bar, i));
      const Vertex r = b.add(tag("r" + bar, i));
      b.link(v, p);
      b.link(p, q);
      b.link(q, r);
      for (std::size_t l = 1; l <= kk; ++l) b.link(r, b.support(tag("s" + bar, i, l)));
      (sign > 0 ? out.positive : out.negative)[i] = v;
      (sign > 0 ? out.positive_p : out.negative_p)[i] = p;
    }
  }

  for (const auto& g : gadgets) {
    for (Vertex lit : {*out.positive[g.var], *out.negative[g.var]}) {
      b.link(lit, g.c);
      b.link(lit, g.d);
    }
  }
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    for (int lit : f.clauses[j]) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      const Vertex v = *(lit > 0 ? out.positive : out.negative)[var];
      b.link(v, u[j]);
      b.link(v, w[j]);
    }
  }

  const std::vector<Vertex> supports = b.supports;
  for (Vertex s : supports)
    for (std::size_t l = 1; l <= kk + 1; ++l) b.link(s, b.add(tag("pendant", s + 1, l)));

  out.reduced.graph = Graph::from_edges(b.roles.size(), b.edges);
  out.reduced.k = k;
  out.roles = std::move(b.roles);
  out.supports = supports;
  return out;
}

std::vector<std::string> role_comments(const GadgetLayout& layout) {
  std::vector<std::string> out;
  out.reserve(layout.roles.size());
  for (std::size_t v = 0; v < layout.roles.size(); ++v)
    out.push_back("role " + std::to_string(v + 1) + " " + layout.roles[v]);
  return out;
}

GadgetLayout layout_from_roles(const ParsedGraph& parsed) {
  const Graph& g = parsed.instance.graph;
  std::vector<std::string> roles(g.order());
  for (const std::string& line : parsed.comments) {
    std::istringstream in(line);
    std::string word, role;
    std::size_t id = 0;
    if (!(in >> word) || word != "role") continue;
    if (!(in >> id >> role) || id < 1 || id > g.order())
      throw PreconditionError("malformed role annotation '" + line + "'");
    roles[id - 1] = role;
  }
  for (std::size_t v = 0; v < roles.size(); ++v)
    if (roles[v].empty()) throw PreconditionError("vertex " + std::to_string(v + 1) + " has no role annotation");

  // Clause literals come from the literal vertices adjacent to each u_j.
  std::map<std::size_t, std::vector<int>> clauses;
  int num_vars = 0;
  auto literal_of = [&](const std::string& r) -> int {
    const bool neg = r.rfind("vbar_", 0) == 0;
    if (!neg && r.rfind("v_", 0) != 0) return 0;
    const int var = std::atoi(r.c_str() + (neg ? 5 : 2));
    return neg ? -var : var;
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    if (const int lit = literal_of(roles[v]); lit != 0) num_vars = std::max(num_vars, std::abs(lit));
    if (roles[v].rfind("u_", 0) != 0) continue;
    const auto j = static_cast<std::size_t>(std::atol(roles[v].c_str() + 2));
    auto& clause = clauses[j];
    for (Vertex w : g.neighbors(v))
      if (const int lit = literal_of(roles[w]); lit != 0) clause.push_back(lit);
    std::sort(clause.begin(), clause.end(), [](int a, int b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b;
    });
  }
  CnfFormula f;
  f.num_vars = num_vars;
  std::size_t expect = 1;
  for (auto& [j, clause] : clauses) {
    if (j != expect++) throw PreconditionError("clause vertices u_1..u_m are not numbered consecutively");
    f.clauses.push_back(std::move(clause));
  }
  GadgetLayout rebuilt;
  try {
    rebuilt = xsat_to_mmds(f, parsed.instance.k);
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string("annotated graph does not describe a gadget instance: ") + e.what());
  }
  if (!(rebuilt.reduced.graph == g) || rebuilt.roles != roles)
    throw PreconditionError("graph does not match the gadget construction of its annotated formula");
  return rebuilt;
}

VertexSet assignment_to_solution(const GadgetLayout& layout, const Assignment& a) {
  if (!xsat_check(layout.formula, a)) throw PreconditionError("assignment is not an exactly-one assignment");
  VertexSet s(layout.reduced.graph.order());
  for (Vertex v : layout.supports) s.insert(v);
  for (int var = 1; var <= layout.formula.num_vars; ++var) {
    const auto i = static_cast<std::size_t>(var);
    for (const auto& p : {layout.positive_p[i], layout.negative_p[i]})
      if (p) s.insert(*p);
    const auto& lit = a.values[i - 1] ? layout.positive[i] : layout.negative[i];
    if (lit) s.insert(*lit);
  }
  return s;
}

std::optional<VertexSet> solve_reduced_instance(const GadgetLayout& layout) {
  const GadgetLayout rebuilt = xsat_to_mmds(layout.formula, layout.reduced.k);
  if (!(rebuilt.reduced.graph == layout.reduced.graph) || rebuilt.roles != layout.roles)
    throw PreconditionError("layout graph is not the gadget construction of its formula");

  std::vector<std::size_t> open;
  for (std::size_t i = 1; i < layout.positive.size(); ++i)
    if (layout.positive[i] || layout.negative[i]) open.push_back(i);

  if (open.size() > kGadgetEnumerationCap) {
    const auto a = xsat_search(layout.formula);
    if (!a) return std::nullopt;
    VertexSet s = assignment_to_solution(layout, *a);
    if (!is_mmds(layout.reduced, s)) throw Error("internal: gadget witness rejected by the checker");
    return s;
  }

  VertexSet forced(layout.reduced.graph.order());
  for (Vertex v : layout.supports) forced.insert(v);
  for (std::size_t i : open)
    for (const auto& p : {layout.positive_p[i], layout.negative_p[i]})
      if (p) forced.insert(*p);

  const std::uint64_t total = std::uint64_t{1} << open.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    VertexSet s = forced;
    for (std::size_t b = 0; b < open.size(); ++b) {
      const auto& lit = (mask >> b & 1) ? layout.positive[open[b]] : layout.negative[open[b]];
      if (lit) s.insert(*lit);
    }
    if (is_mmds(layout.reduced, s)) return s;
  }
  return std::nullopt;
}

}  // namespace mmds
