#pragma once

#include "cpgame/cnf.hpp"
#include "cpgame/game.hpp"
#include "cpgame/solver.hpp"

namespace cpgame {

/// Maps a 3CNF formula with n clauses to a two-player common-payoff game:
/// nature draws one of the 3n (clause, literal position) pairs uniformly;
/// player 1 observes the literal's variable and assigns it a truth value;
/// player 2 observes the clause and picks a literal position.  The payoff is
/// 3 when player 2's position matches nature's and player 1's truth value
/// makes that literal true, else 0.  The game's optimal value is 1 exactly
/// when the formula is satisfiable, and the game size is linear in n.
///
/// Identifiers: worlds "w_i_j", variables "z<k>", clauses "C<i>", player 1
/// actions {"true","false"}, player 2 actions {"1","2","3"}.
Game reduce_3sat(const CnfFormula& phi);

/// Certificate translation, satisfying assignment -> optimal profile:
/// player 1 plays the assignment; player 2 picks, per clause, the
/// lowest-index literal the assignment makes true.  The result has expected
/// payoff exactly 1 on reduce_3sat(phi).  Throws PreconditionError when
/// `alpha` does not satisfy `phi`.
JointStrategy assignment_to_strategy(const CnfFormula& phi, const Assignment& alpha);

/// Certificate translation, high-payoff profile -> satisfying assignment:
/// reads player 1's strategy as a truth assignment.  Requires
/// expected_payoff(reduce_3sat(phi), js) >= 1 (PreconditionError otherwise);
/// the returned assignment is checked to satisfy `phi` before returning.
Assignment strategy_to_assignment(const CnfFormula& phi, const JointStrategy& js);

/// Optimal value of the reduced game, asserted to be at most 1: at most one
/// of the three worlds of each clause can pay.
Rational max_payoff_cap_check(const CnfFormula& phi, const SolveOptions& options = {});

/// Equisatisfiable rewrite in which every variable occurs in at most three
/// clauses.  A variable occurring in k > 3 clauses is replaced by fresh
/// copies x^1..x^k, one per occurring clause (the first copy keeps the
/// original index), chained cyclically by implication clauses
/// (-x^t v x^{t+1} v x^{t+1}) that force all copies equal.  Formulas already
/// within the bound are returned unchanged.  Output size is linear in the
/// input size.
CnfFormula bound_occurrences(const CnfFormula& phi);

}  // namespace cpgame
