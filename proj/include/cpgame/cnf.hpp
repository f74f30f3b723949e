#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace cpgame {

/// A variable (1-based index) or its negation.
struct Literal {
  int variable = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Exactly three literal slots.  Narrower clauses are padded by duplicating
/// their last literal; original_width remembers the width before padding so
/// the clause round-trips to readable DIMACS.
struct Clause {
  std::array<Literal, 3> literals{};
  int original_width = 3;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// 3CNF formula over variables 1..variable_count.
struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;

  /// Every invariant violation found: out-of-range or unused variable
  /// indices, more variables than three per clause allow.
  std::vector<std::string> validate() const;
  bool valid() const { return validate().empty(); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Total truth assignment; index k-1 holds the value of variable k.
using Assignment = std::vector<bool>;

/// Builds a clause from 1..3 literals, padding to width three by duplicating
/// the last literal.
Clause make_clause(const std::vector<Literal>& literals);

/// Convenience for DIMACS-style signed integers: -k means "not k".
Clause make_clause_dimacs(const std::vector<int>& literals);

bool literal_true(const Literal& literal, const Assignment& alpha);

/// Number of distinct clauses each variable occurs in (index k-1 for
/// variable k); duplicated literals inside one clause count once.
std::vector<int> clause_occurrence_counts(const CnfFormula& formula);

}  // namespace cpgame
