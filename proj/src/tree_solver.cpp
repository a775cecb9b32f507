#include "mmds/tree_solver.hpp"

#include <algorithm>
#include <string>

#include "mmds/error.hpp"
#include "mmds/graph_classes.hpp"

namespace mmds {

RootedTree root_tree(const Graph& g, Vertex r) {
  const std::size_t n = g.order();
  if (r >= n) throw PreconditionError("root " + std::to_string(r + 1) + " outside 1.." + std::to_string(n));
  if (g.size() + 1 != n) throw PreconditionError("graph is not a tree (m != n - 1)");

  RootedTree t;
  t.root = r;
  t.parent.assign(n, r);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> bfs;
  bfs.reserve(n);
  bfs.push_back(r);
  seen[r] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const Vertex u = bfs[head];
    for (Vertex w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = u;
      bfs.push_back(w);
    }
  }
  if (bfs.size() != n) throw PreconditionError("graph is not a tree (disconnected)");

  t.child_offset.assign(n + 1, 0);
  for (Vertex v : bfs) {
    if (v != r) ++t.child_offset[t.parent[v] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) t.child_offset[i + 1] += t.child_offset[i];
  t.child_list.resize(n ? n - 1 : 0);
  std::vector<std::size_t> fill(t.child_offset.begin(), t.child_offset.end() - 1);
  for (Vertex v : bfs) {
    if (v != r) t.child_list[fill[t.parent[v]]++] = v;
  }
  t.post_order.assign(bfs.rbegin(), bfs.rend());
  return t;
}

namespace {

bool forced_in(const TreeNodeState& s) { return !s.mminus && !s.mprime; }

// Number of children v with M-(v) = 0 and M'(v) = 0.
std::size_t forced_children(const RootedTree& t, const std::vector<TreeNodeState>& st, Vertex u) {
  std::size_t c = 0;
  for (Vertex v : t.children(u)) c += forced_in(st[v]) ? 1 : 0;
  return c;
}

void fill_gates(const RootedTree& t, std::vector<TreeNodeState>& st, Vertex u, int k) {
  const auto forced = static_cast<long>(forced_children(t, st, u));
  st[u].p = forced <= k;
  st[u].q = forced <= k - 1;
  st[u].rr = (forced_in(st[u]) ? 1 : 0) + forced <= k - 1;
}

}  // namespace

TreeDpState dp_compute(const RootedTree& t, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const std::size_t n = t.order();
  TreeDpState out;
  out.nodes.resize(n);
  out.feasible.resize(n);

  for (Vertex u : t.post_order) {
    for (int x = 0; x <= 1; ++x) {
      long must = 0, flexible = 0;
      bool ok = true;
      for (Vertex v : t.children(u)) {
        const bool out_ok = out.feasible[v][0][x];
        const bool in_ok = out.feasible[v][1][x];
        if (!out_ok && !in_ok) {
          ok = false;
          break;
        }
        if (in_ok && !out_ok) ++must;
        if (in_ok && out_ok) ++flexible;
      }
      for (int y = 0; y <= 1; ++y) {
        // children in S must total s with 1 <= x + s + y <= k
        const long lo = std::max<long>(must, 1 - x - y);
        const long hi = std::min<long>(must + flexible, k - x - y);
        out.feasible[u][x][y] = ok && lo <= hi;
      }
    }
    TreeNodeState& s = out.nodes[u];
    s.mplus = out.feasible[u][1][0];
    s.mminus = out.feasible[u][0][0];
    s.m = s.mplus || s.mminus;
    bool all_children_avoidable = true;
    for (Vertex v : t.children(u)) all_children_avoidable = all_children_avoidable && out.feasible[v][0][0];
    s.mprime = !s.mminus && all_children_avoidable;
    fill_gates(t, out.nodes, u, k);
  }
  return out;
}

TreeDpState dp_compute_literal(const RootedTree& t, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const std::size_t n = t.order();
  TreeDpState out;
  out.nodes.resize(n);
  out.feasible.resize(n);
  auto& st = out.nodes;
  std::vector<long> forced(n, 0);

  for (Vertex u : t.post_order) {
    TreeNodeState& s = st[u];
    if (t.is_leaf(u)) {
      s.mplus = true;
      s.mminus = false;
      s.m = true;
      s.mprime = true;
      fill_gates(t, st, u, k);
      forced[u] = 0;
      continue;
    }
    forced[u] = static_cast<long>(forced_children(t, st, u));
    const bool p = forced[u] <= k;
    const bool q = forced[u] <= k - 1;

    bool all_m = true, some_dominator = false, all_minus = true;
    for (Vertex v : t.children(u)) {
      all_m = all_m && st[v].m;
      if (!st[v].mminus && !st[v].mprime) some_dominator = true;
      all_minus = all_minus && st[v].mminus;
    }
    s.mminus = all_m && some_dominator && p;
    s.mprime = !s.mminus && all_minus;

    bool plus = q;
    for (Vertex v : t.children(u)) {
      if (!plus) break;
      const bool r_v = (forced_in(st[v]) ? 1 : 0) + forced[v] <= k - 1;
      bool a = true, b = false, c = true;
      for (Vertex w : t.children(v)) {
        a = a && st[w].m;
        const bool exactly_k = forced[w] == k;
        b = b || exactly_k;
        bool deeper = false;
        for (Vertex j : t.children(w)) {
          if ((forced_in(st[j]) ? 1 : 0) + forced[j] == k) deeper = true;
        }
        c = c && (exactly_k || deeper);
      }
      const bool y = st[v].m || (a && b && c);
      plus = r_v && y;
    }
    s.mplus = plus;
    s.m = s.mplus || s.mminus;
    fill_gates(t, st, u, k);
  }
  return out;
}

bool solve_tree(const Instance& inst) {
  if (!is_tree(inst.graph)) throw PreconditionError("graph is not a tree");
  const RootedTree t = root_tree(inst.graph, 0);
  return dp_compute(t, inst.k).nodes[t.root].m;
}

std::optional<VertexSet> tree_witness(const Instance& inst) {
  if (!is_tree(inst.graph)) throw PreconditionError("graph is not a tree");
  const RootedTree t = root_tree(inst.graph, 0);
  const TreeDpState dp = dp_compute(t, inst.k);
  const std::size_t n = t.order();
  std::vector<int> in(n, -1);
  if (dp.feasible[t.root][0][0])
    in[t.root] = 0;
  else if (dp.feasible[t.root][1][0])
    in[t.root] = 1;
  else
    return std::nullopt;

  // Reverse post-order visits parents before children.
  for (auto it = t.post_order.rbegin(); it != t.post_order.rend(); ++it) {
    const Vertex u = *it;
    const int x = in[u];
    const int y = u == t.root ? 0 : in[t.parent[u]];
    long must = 0;
    for (Vertex v : t.children(u)) must += dp.feasible[v][0][x] ? 0 : 1;
    long extra = std::max<long>(must, 1 - x - y) - must;
    for (Vertex v : t.children(u)) {
      if (!dp.feasible[v][0][x]) {
        in[v] = 1;
      } else if (extra > 0 && dp.feasible[v][1][x]) {
        in[v] = 1;
        --extra;
      } else {
        in[v] = 0;
      }
    }
  }
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (in[v] == 1) s.insert(v);
  return s;
}

}  // namespace mmds
