#include "cpgame/reduction.hpp"

#include <algorithm>

#include "cpgame/errors.hpp"
#include "cpgame/evaluate.hpp"
#include "cpgame/sat.hpp"

namespace cpgame {

namespace {

void require_wellformed(const CnfFormula& phi) {
  for (const std::string& violation : phi.validate()) {
    throw ValidationError(violation);
  }
  if (phi.clauses.empty()) {
    throw ValidationError("the reduction needs at least one clause");
  }
}

}  // namespace

Game reduce_3sat(const CnfFormula& phi) {
  require_wellformed(phi);
  const int n = static_cast<int>(phi.clauses.size());
  const int m = phi.variable_count;

  std::vector<std::vector<std::string>> actions = {{"true", "false"}, {"1", "2", "3"}};
  std::vector<std::vector<std::string>> observations(2);
  for (int k = 1; k <= m; ++k) observations[0].push_back("z" + std::to_string(k));
  for (int i = 1; i <= n; ++i) observations[1].push_back("C" + std::to_string(i));

  const Rational pr(1, Integer(3) * n);
  std::vector<World> worlds;
  worlds.reserve(static_cast<std::size_t>(3) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Literal& lit = phi.clauses[i].literals[j];
      World world;
      world.id = "w_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      world.probability = pr;
      world.observations = {"z" + std::to_string(lit.variable), "C" + std::to_string(i + 1)};
      // Joint actions in lexicographic order: (true,1) (true,2) (true,3)
      // (false,1) (false,2) (false,3).
      world.payoffs.assign(6, {Rational(0), Rational(0)});
      const int paying_row = lit.negated ? 1 : 0;
      world.payoffs[static_cast<std::size_t>(paying_row) * 3 + j] = {Rational(3), Rational(3)};
      worlds.push_back(std::move(world));
    }
  }
  return Game(std::move(actions), std::move(observations), std::move(worlds));
}

JointStrategy assignment_to_strategy(const CnfFormula& phi, const Assignment& alpha) {
  require_wellformed(phi);
  if (!verify_assignment(phi, alpha)) {
    throw PreconditionError("assignment does not satisfy the formula");
  }

  JointStrategy js;
  Strategy guesser{0, std::vector<int>(phi.variable_count)};
  for (int v = 0; v < phi.variable_count; ++v) {
    guesser.choice[v] = alpha[v] ? 0 : 1;  // action 0 = "true", 1 = "false"
  }

  Strategy verifier{1, std::vector<int>(phi.clauses.size())};
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    for (int j = 0; j < 3; ++j) {
      if (literal_true(phi.clauses[c].literals[j], alpha)) {
        verifier.choice[c] = j;
        break;
      }
    }
  }

  js.per_player = {std::move(guesser), std::move(verifier)};
  return js;
}

Assignment strategy_to_assignment(const CnfFormula& phi, const JointStrategy& js) {
  require_wellformed(phi);
  const Game game = reduce_3sat(phi);
  const Rational value = expected_payoff(game, js);
  if (value < Rational(1)) {
    throw PreconditionError("joint strategy has expected payoff " + value.str() +
                            " < 1 and certifies nothing");
  }

  Assignment alpha(phi.variable_count);
  for (int v = 0; v < phi.variable_count; ++v) {
    alpha[v] = js.per_player[0].choice[v] == 0;
  }
  // A payoff of 1 forces, for every clause, a literal that the assignment
  // makes true; anything else would contradict the value just computed.
  if (!verify_assignment(phi, alpha)) {
    throw Error("internal: payoff-1 strategy yielded a non-satisfying assignment");
  }
  return alpha;
}

Rational max_payoff_cap_check(const CnfFormula& phi, const SolveOptions& options) {
  const Game game = reduce_3sat(phi);
  const Rational value = brute_force_optimal(game, options).optimal_value;
  if (value > Rational(1)) {
    throw Error("internal: reduced game exceeds the payoff cap of 1");
  }
  return value;
}

CnfFormula bound_occurrences(const CnfFormula& phi) {
  for (const std::string& violation : phi.validate()) {
    throw ValidationError(violation);
  }
  const std::vector<int> counts = clause_occurrence_counts(phi);
  if (std::all_of(counts.begin(), counts.end(), [](int c) { return c <= 3; })) {
    return phi;
  }

  CnfFormula out;
  out.clauses = phi.clauses;
  int next_fresh = phi.variable_count + 1;

  // copies[v] lists the variable index standing for each occurring clause of
  // v+1, in clause order; the first copy reuses the original index.
  std::vector<std::vector<int>> copies(phi.variable_count);
  for (int v = 0; v < phi.variable_count; ++v) {
    if (counts[v] <= 3) continue;
    copies[v].reserve(counts[v]);
    copies[v].push_back(v + 1);
    for (int t = 1; t < counts[v]; ++t) copies[v].push_back(next_fresh++);
  }

  std::vector<int> seen_so_far(phi.variable_count, 0);
  std::vector<int> last_clause(phi.variable_count, -1);
  for (std::size_t c = 0; c < out.clauses.size(); ++c) {
    for (Literal& lit : out.clauses[c].literals) {
      const int v = lit.variable - 1;
      if (copies[v].empty()) continue;
      if (last_clause[v] != static_cast<int>(c)) {
        last_clause[v] = static_cast<int>(c);
        ++seen_so_far[v];
      }
      lit.variable = copies[v][seen_so_far[v] - 1];
    }
  }

  for (int v = 0; v < phi.variable_count; ++v) {
    const auto& chain = copies[v];
    if (chain.empty()) continue;
    const int k = static_cast<int>(chain.size());
    for (int t = 0; t < k; ++t) {
      const int from = chain[t];
      const int to = chain[(t + 1) % k];
      out.clauses.push_back(make_clause({Literal{from, true}, Literal{to, false}}));
    }
  }

  out.variable_count = next_fresh - 1;
  return out;
}

}  // namespace cpgame
