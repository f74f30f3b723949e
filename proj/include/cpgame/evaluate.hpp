#pragma once

#include <vector>

#include "cpgame/game.hpp"
#include "cpgame/rational.hpp"

namespace cpgame {

/// Expected common payoff of a pure profile:
/// sum over worlds of Pr(w) times the payoff of the joint action each
/// player's strategy selects at its observation of w.  Exact.
/// Requires a common-payoff game; throws ValidationError otherwise or when
/// the profile does not fit the game.
Rational expected_payoff(const Game& game, const JointStrategy& js);

/// Per-player expected payoffs of a pure profile; defined for general
/// (non-common) payoff games as well.
std::vector<Rational> expected_joint_payoff(const Game& game, const JointStrategy& js);

/// Expected common payoff of independent per-player mixtures: the convex
/// combination, over the cartesian product of the supports, of the pure
/// profile payoffs weighted by the product of the per-player weights.
Rational expected_payoff_mixed(const Game& game, const MixedJointStrategy& mjs);

/// Payoff-maximizing strategy of `player` with all other players fixed,
/// computed independently per observation; ties broken by lowest action
/// index.  Maximizes the player's own payoff component, so it is defined for
/// general payoff games too.
Strategy best_response(const Game& game, const JointStrategy& js, int player);

/// True iff no player can raise their own expected payoff by a unilateral
/// deviation (equivalently, by switching to their best response).
bool is_nash(const Game& game, const JointStrategy& js);

/// Common-payoff games only: true iff the profile attains the global maximum
/// expected payoff over all pure joint strategies.
bool is_pareto_optimal(const Game& game, const JointStrategy& js);

}  // namespace cpgame
