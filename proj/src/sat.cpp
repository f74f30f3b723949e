#include "cpgame/sat.hpp"

#include <nlohmann/json.hpp>

#include "cpgame/errors.hpp"

namespace cpgame {

namespace {

enum class Value : signed char { Free = -1, False = 0, True = 1 };

class Dpll {
public:
  explicit Dpll(const CnfFormula& formula)
      : formula_(formula), values_(formula.variable_count, Value::Free) {}

  SatVerdict solve() {
    SatVerdict verdict;
    verdict.satisfiable = search();
    verdict.decisions = decisions_;
    verdict.propagations = propagations_;
    if (verdict.satisfiable) {
      verdict.assignment.resize(formula_.variable_count);
      for (int v = 0; v < formula_.variable_count; ++v) {
        verdict.assignment[v] = values_[v] == Value::True;
      }
    }
    return verdict;
  }

private:
  Value literal_value(const Literal& lit) const {
    const Value v = values_[lit.variable - 1];
    if (v == Value::Free) return Value::Free;
    const bool truth = (v == Value::True) != lit.negated;
    return truth ? Value::True : Value::False;
  }

  // Applies unit propagation and pure-literal elimination to fixpoint.
  // Returns false on conflict; records assignments in `trail`.
  bool infer(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& clause : formula_.clauses) {
        bool satisfied = false;
        const Literal* unit = nullptr;
        int free_count = 0;
        for (const Literal& lit : clause.literals) {
          const Value v = literal_value(lit);
          if (v == Value::True) {
            satisfied = true;
            break;
          }
          if (v == Value::Free) {
            // Duplicated literals count once for unit detection.
            if (unit == nullptr || !(unit->variable == lit.variable && unit->negated == lit.negated)) {
              ++free_count;
            }
            unit = &lit;
          }
        }
        if (satisfied) continue;
        if (free_count == 0) return false;
        if (free_count == 1) {
          set(*unit, trail);
          ++propagations_;
          changed = true;
        }
      }
      if (changed) continue;

      // Pure literals, variables in index order, with respect to clauses not
      // yet satisfied.
      std::vector<signed char> polarity(formula_.variable_count, 0);  // bits: 1 pos, 2 neg
      for (const Clause& clause : formula_.clauses) {
        bool satisfied = false;
        for (const Literal& lit : clause.literals) {
          if (literal_value(lit) == Value::True) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        for (const Literal& lit : clause.literals) {
          if (literal_value(lit) == Value::Free) {
            polarity[lit.variable - 1] |= lit.negated ? 2 : 1;
          }
        }
      }
      for (int v = 0; v < formula_.variable_count; ++v) {
        if (values_[v] != Value::Free) continue;
        if (polarity[v] == 1 || polarity[v] == 2) {
          set(Literal{v + 1, polarity[v] == 2}, trail);
          ++propagations_;
          changed = true;
        }
      }
    }
    return true;
  }

  bool all_satisfied() const {
    for (const Clause& clause : formula_.clauses) {
      bool satisfied = false;
      for (const Literal& lit : clause.literals) {
        if (literal_value(lit) == Value::True) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) return false;
    }
    return true;
  }

  void set(const Literal& lit, std::vector<int>& trail) {
    values_[lit.variable - 1] = lit.negated ? Value::False : Value::True;
    trail.push_back(lit.variable);
  }

  void undo(const std::vector<int>& trail) {
    for (int variable : trail) values_[variable - 1] = Value::Free;
  }

  bool search() {
    std::vector<int> trail;
    if (!infer(trail)) {
      undo(trail);
      return false;
    }
    if (all_satisfied()) return true;

    int branch = -1;
    for (int v = 0; v < formula_.variable_count; ++v) {
      if (values_[v] == Value::Free) {
        branch = v + 1;
        break;
      }
    }
    if (branch < 0) {
      // Everything assigned yet some clause unsatisfied.
      undo(trail);
      return false;
    }

    ++decisions_;
    for (bool negated : {false, true}) {
      std::vector<int> branch_trail;
      set(Literal{branch, negated}, branch_trail);
      if (search()) return true;
      undo(branch_trail);
    }
    undo(trail);
    return false;
  }

  const CnfFormula& formula_;
  std::vector<Value> values_;
  std::uint64_t decisions_ = 0;
  std::uint64_t propagations_ = 0;
};

}  // namespace

SatVerdict dpll_solve(const CnfFormula& formula) {
  for (const std::string& violation : formula.validate()) {
    throw ValidationError(violation);
  }
  return Dpll(formula).solve();
}

bool verify_assignment(const CnfFormula& formula, const Assignment& alpha) {
  if (static_cast<int>(alpha.size()) != formula.variable_count) {
    throw ValidationError("assignment covers " + std::to_string(alpha.size()) + " of " +
                          std::to_string(formula.variable_count) + " variables");
  }
  for (const Clause& clause : formula.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause.literals) {
      if (literal_true(lit, alpha)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

std::string verdict_to_json(const SatVerdict& verdict) {
  nlohmann::ordered_json doc;
  doc["outcome"] = verdict.satisfiable ? "sat" : "unsat";
  if (verdict.satisfiable) {
    doc["assignment"] = verdict.assignment;
  } else {
    doc["assignment"] = nullptr;
  }
  doc["decisions"] = verdict.decisions;
  doc["propagations"] = verdict.propagations;
  return doc.dump();
}

}  // namespace cpgame
