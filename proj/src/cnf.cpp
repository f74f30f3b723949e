#include "cpgame/cnf.hpp"

#include <cstdlib>

#include "cpgame/errors.hpp"

namespace cpgame {

Clause make_clause(const std::vector<Literal>& literals) {
  if (literals.empty() || literals.size() > 3) {
    throw ValidationError("a clause needs between one and three literals, got " +
                          std::to_string(literals.size()));
  }
  Clause clause;
  clause.original_width = static_cast<int>(literals.size());
  for (std::size_t j = 0; j < 3; ++j) {
    clause.literals[j] = literals[std::min(j, literals.size() - 1)];
  }
  return clause;
}

Clause make_clause_dimacs(const std::vector<int>& literals) {
  std::vector<Literal> parsed;
  parsed.reserve(literals.size());
  for (int lit : literals) {
    if (lit == 0) throw ValidationError("literal 0 is not a variable");
    parsed.push_back(Literal{std::abs(lit), lit < 0});
  }
  return make_clause(parsed);
}

bool literal_true(const Literal& literal, const Assignment& alpha) {
  return alpha[literal.variable - 1] != literal.negated;
}

std::vector<int> clause_occurrence_counts(const CnfFormula& formula) {
  std::vector<int> counts(formula.variable_count, 0);
  std::vector<int> last_clause(formula.variable_count, -1);
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    for (const Literal& lit : formula.clauses[c].literals) {
      if (lit.variable < 1 || lit.variable > formula.variable_count) continue;
      if (last_clause[lit.variable - 1] == static_cast<int>(c)) continue;
      last_clause[lit.variable - 1] = static_cast<int>(c);
      ++counts[lit.variable - 1];
    }
  }
  return counts;
}

std::vector<std::string> CnfFormula::validate() const {
  std::vector<std::string> violations;
  if (variable_count < 0) {
    violations.push_back("negative variable count");
    return violations;
  }
  std::vector<bool> used(variable_count, false);
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const Clause& clause = clauses[c];
    if (clause.original_width < 1 || clause.original_width > 3) {
      violations.push_back("clause " + std::to_string(c + 1) + " has original width " +
                           std::to_string(clause.original_width));
    }
    for (const Literal& lit : clause.literals) {
      if (lit.variable < 1 || lit.variable > variable_count) {
        violations.push_back("clause " + std::to_string(c + 1) + " uses variable " +
                             std::to_string(lit.variable) + " outside 1.." +
                             std::to_string(variable_count));
      } else {
        used[lit.variable - 1] = true;
      }
    }
  }
  for (int v = 0; v < variable_count; ++v) {
    if (!used[v]) {
      violations.push_back("variable " + std::to_string(v + 1) + " occurs in no clause");
    }
  }
  if (variable_count > 3 * static_cast<int>(clauses.size())) {
    violations.push_back(std::to_string(variable_count) + " variables cannot all occur in " +
                         std::to_string(clauses.size()) + " three-literal clauses");
  }
  return violations;
}

}  // namespace cpgame
