#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmds {

/// CNF over variables 1..num_vars; a literal is +v or -v.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  /// occurrences()[v] = number of clauses containing v or -v (index 0 unused).
  std::vector<std::size_t> occurrences() const;
  bool operator==(const CnfFormula&) const = default;
};

/// values[v - 1] is the value of variable v.
struct Assignment {
  std::vector<bool> values;
  bool value(int literal) const;
  bool operator==(const Assignment&) const = default;
};

/// Throws PreconditionError on empty clauses or variable ids outside 1..num_vars.
void validate(const CnfFormula& f);

/// At most 3 literals per clause and every variable in at most 3 clauses.
bool is_3cnf_le3(const CnfFormula& f);

/// DIMACS CNF: optional "c" comment lines, "p cnf <n> <m>", then m clauses of
/// signed literals each terminated by 0 (clauses may span lines).
/// Throws ParseError with the offending line number.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

/// Exactly one true literal in every clause.
bool xsat_check(const CnfFormula& f, const Assignment& a);
/// At least one true literal in every clause.
bool sat_check(const CnfFormula& f, const Assignment& a);

inline constexpr int kSatBruteForceCap = 24;

/// First assignment in binary counting order (variable 1 is the lowest bit)
/// that satisfies the formula. CapExceeded above kSatBruteForceCap variables.
std::optional<Assignment> xsat_brute_force(const CnfFormula& f);
std::optional<Assignment> sat_brute_force(const CnfFormula& f);

/// Exact backtracking search for an exactly-one assignment with unit
/// propagation; no variable cap. Returns some satisfying assignment, not
/// necessarily the first in counting order.
std::optional<Assignment> xsat_search(const CnfFormula& f);

/// Rewrites a 3-CNF formula into one whose exactly-one satisfiability equals
/// the ordinary satisfiability of the input:
///   (x ∨ y ∨ z) -> (¬x ∨ a ∨ b) (y ∨ b ∨ c) (¬z ∨ c ∨ d)
///   (x ∨ y)     -> (¬x ∨ a ∨ b) (y ∨ b)
///   (x)         -> (x)
/// with fresh variables numbered after the input's, clause by clause.
/// Throws PreconditionError on clauses wider than 3.
CnfFormula threesat_to_xsat(const CnfFormula& f);

}  // namespace mmds
