#pragma once

#include <cstdint>
#include <string>

#include "cpgame/cnf.hpp"

namespace cpgame {

struct SatVerdict {
  bool satisfiable = false;
  /// Total assignment when satisfiable (variables the search left free are
  /// completed to false); empty otherwise.
  Assignment assignment;
  std::uint64_t decisions = 0;
  /// Literals assigned by inference: unit propagation plus pure-literal
  /// elimination.
  std::uint64_t propagations = 0;
};

/// Complete DPLL: chronological backtracking with unit propagation and
/// pure-literal elimination.  Branches on the lowest-index unassigned
/// variable, true first.  Deterministic: identical inputs produce identical
/// verdicts, assignments and counters.
SatVerdict dpll_solve(const CnfFormula& formula);

/// True iff every clause contains a literal made true by `alpha`.
/// Throws ValidationError when `alpha` is not total over the variables.
bool verify_assignment(const CnfFormula& formula, const Assignment& alpha);

/// {"outcome": "sat"|"unsat", "assignment": [...]|null, "decisions": d,
///  "propagations": p}
std::string verdict_to_json(const SatVerdict& verdict);

}  // namespace cpgame
