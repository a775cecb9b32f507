#include "mmds/sat.hpp"

#include <cstdlib>
#include <sstream>

#include "mmds/error.hpp"

namespace mmds {

std::vector<std::size_t> CnfFormula::occurrences() const {
  std::vector<std::size_t> occ(static_cast<std::size_t>(num_vars) + 1, 0);
  for (const auto& clause : clauses) {
    std::vector<int> seen;
    for (int lit : clause) {
      const int v = std::abs(lit);
      bool dup = false;
      for (int s : seen) dup = dup || s == v;
      if (dup) continue;
      seen.push_back(v);
      if (v >= 1 && v <= num_vars) ++occ[static_cast<std::size_t>(v)];
    }
  }
  return occ;
}

bool Assignment::value(int literal) const {
  const bool v = values.at(static_cast<std::size_t>(std::abs(literal)) - 1);
  return literal > 0 ? v : !v;
}

void validate(const CnfFormula& f) {
  if (f.num_vars < 0) throw PreconditionError("negative variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    if (f.clauses[j].empty()) throw PreconditionError("clause " + std::to_string(j + 1) + " is empty");
    for (int lit : f.clauses[j]) {
      if (lit == 0 || std::abs(lit) > f.num_vars) {
        throw PreconditionError("clause " + std::to_string(j + 1) + " uses variable " + std::to_string(std::abs(lit)) +
                                " outside 1.." + std::to_string(f.num_vars));
      }
    }
  }
}

bool is_3cnf_le3(const CnfFormula& f) {
  for (const auto& c : f.clauses)
    if (c.size() > 3) return false;
  for (std::size_t occ : f.occurrences())
    if (occ > 3) return false;
  return true;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;  // trailer used by some benchmark sets
    if (tok == "p") {
      if (header) throw ParseError(line_no, "second problem line");
      std::string kind;
      long long n = -1, m = -1;
      if (!(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0)
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "' in problem line");
      f.num_vars = static_cast<int>(n);
      declared = static_cast<std::size_t>(m);
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before 'p cnf' line");
    do {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw ParseError(line_no, "non-numeric token '" + tok + "'");
      if (lit == 0) {
        if (current.empty()) throw ParseError(line_no, "empty clause");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(lit) > f.num_vars)
        throw ParseError(line_no, "literal " + tok + " outside 1.." + std::to_string(f.num_vars));
      current.push_back(static_cast<int>(lit));
    } while (ls >> tok);
  }
  if (!header) throw ParseError(line_no, "missing 'p cnf' line");
  if (!current.empty()) throw ParseError(line_no, "last clause not terminated by 0");
  if (f.clauses.size() != declared) {
    throw ParseError(line_no, "header declares " + std::to_string(declared) + " clauses, found " +
                                  std::to_string(f.clauses.size()));
  }
  return f;
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

void check_covers(const CnfFormula& f, const Assignment& a) {
  if (a.values.size() != static_cast<std::size_t>(f.num_vars))
    throw PreconditionError("assignment does not cover the formula's variables");
}

std::size_t true_literals(const std::vector<int>& clause, const Assignment& a) {
  std::size_t t = 0;
  for (int lit : clause) t += a.value(lit) ? 1 : 0;
  return t;
}

template <class Accept>
std::optional<Assignment> brute_force(const CnfFormula& f, Accept accept) {
  validate(f);
  if (f.num_vars > kSatBruteForceCap) {
    throw CapExceeded("brute force over " + std::to_string(f.num_vars) + " variables exceeds cap " +
                      std::to_string(kSatBruteForceCap));
  }
  Assignment a;
  a.values.assign(static_cast<std::size_t>(f.num_vars), false);
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int v = 0; v < f.num_vars; ++v) a.values[static_cast<std::size_t>(v)] = (mask >> v) & 1;
    if (accept(f, a)) return a;
  }
  return std::nullopt;
}

// Exactly-one search over partial assignments (-1 unassigned).
class XsatSearch {
 public:
  explicit XsatSearch(const CnfFormula& f) : f_(f), value_(static_cast<std::size_t>(f.num_vars) + 1, -1) {}

  std::optional<Assignment> run() {
    if (!search()) return std::nullopt;
    Assignment a;
    for (int v = 1; v <= f_.num_vars; ++v) a.values.push_back(value_[static_cast<std::size_t>(v)] == 1);
    return a;
  }

 private:
  int lit_value(int lit) const {
    const int v = value_[static_cast<std::size_t>(std::abs(lit))];
    if (v < 0) return -1;
    return lit > 0 ? v : 1 - v;
  }

  void assign(int var, int val, std::vector<int>& trail) {
    value_[static_cast<std::size_t>(var)] = val;
    trail.push_back(var);
  }

  // Propagates to a fixpoint; false on conflict.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : f_.clauses) {
        int trues = 0, open = 0, last_open = 0;
        for (int lit : clause) {
          const int lv = lit_value(lit);
          if (lv == 1) ++trues;
          if (lv < 0) {
            ++open;
            last_open = lit;
          }
        }
        if (trues > 1) return false;
        if (trues == 0 && open == 0) return false;
        if (trues == 1 && open > 0) {
          for (int lit : clause) {
            if (lit_value(lit) >= 0) continue;
            // A literal repeated in the clause may already be set by now.
            assign(std::abs(lit), lit > 0 ? 0 : 1, trail);
          }
          changed = true;
        } else if (trues == 0 && open == 1) {
          assign(std::abs(last_open), last_open > 0 ? 1 : 0, trail);
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int v : trail) value_[static_cast<std::size_t>(v)] = -1;
    trail.clear();
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    int pick = 0;
    for (int v = 1; v <= f_.num_vars && pick == 0; ++v)
      if (value_[static_cast<std::size_t>(v)] < 0) pick = v;
    if (pick == 0) return true;
    for (int val : {1, 0}) {
      std::vector<int> local;
      assign(pick, val, local);
      if (search()) return true;
      undo(local);
    }
    undo(trail);
    return false;
  }

  const CnfFormula& f_;
  std::vector<int> value_;
};

}  // namespace

bool xsat_check(const CnfFormula& f, const Assignment& a) {
  check_covers(f, a);
  for (const auto& c : f.clauses)
    if (true_literals(c, a) != 1) return false;
  return true;
}

bool sat_check(const CnfFormula& f, const Assignment& a) {
  check_covers(f, a);
  for (const auto& c : f.clauses)
    if (true_literals(c, a) == 0) return false;
  return true;
}

std::optional<Assignment> xsat_brute_force(const CnfFormula& f) { return brute_force(f, xsat_check); }
std::optional<Assignment> sat_brute_force(const CnfFormula& f) { return brute_force(f, sat_check); }

std::optional<Assignment> xsat_search(const CnfFormula& f) {
  validate(f);
  return XsatSearch(f).run();
}

CnfFormula threesat_to_xsat(const CnfFormula& f) {
  validate(f);
  CnfFormula out;
  out.num_vars = f.num_vars;
  auto fresh = [&] { return ++out.num_vars; };
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    if (c.size() == 3) {
      const int a = fresh(), b = fresh(), cc = fresh(), d = fresh();
      out.clauses.push_back({-c[0], a, b});
      out.clauses.push_back({c[1], b, cc});
      out.clauses.push_back({-c[2], cc, d});
    } else if (c.size() == 2) {
      const int a = fresh(), b = fresh();
      out.clauses.push_back({-c[0], a, b});
      out.clauses.push_back({c[1], b});
    } else if (c.size() == 1) {
      out.clauses.push_back(c);
    } else {
      throw PreconditionError("clause " + std::to_string(j + 1) + " has " + std::to_string(c.size()) +
                              " literals; at most 3 are supported");
    }
  }
  return out;
}

}  // namespace mmds
