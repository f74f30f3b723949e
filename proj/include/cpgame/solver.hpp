#pragma once

#include <cstdint>
#include <optional>

#include "cpgame/game.hpp"
#include "cpgame/normal_form.hpp"
#include "cpgame/rational.hpp"

namespace cpgame {

struct SolveResult {
  Rational optimal_value;
  JointStrategy witness;                 // expected_payoff(game, witness) == optimal_value
  std::uint64_t profiles_examined = 0;   // full profiles evaluated
  std::uint64_t nodes_pruned = 0;        // branch and bound only
};

struct SolveOptions {
  /// Size guard for exhaustive enumeration: error out when the number of
  /// pure joint strategies exceeds this.
  std::uint64_t profile_cap = 100'000'000;
};

struct NormalFormOptions {
  /// Size guard for the dense expected-payoff array.
  std::uint64_t entry_cap = 100'000;
};

/// Enumerates every pure joint strategy in lexicographic order (players in
/// index order, observations in declared order, actions by index) and
/// returns the first profile attaining the maximum expected payoff.
/// Common-payoff games only.  Throws SizeCapError above the cap.
SolveResult brute_force_optimal(const Game& game, const SolveOptions& options = {});

/// Depth-first search over per-observation action choices, players in index
/// order.  The bound at a partial assignment is the probability-weighted sum
/// of each world's best payoff among joint actions still consistent with the
/// decided choices; a subtree is pruned when its bound cannot beat the
/// incumbent.  Returns the same optimal value as brute_force_optimal (the
/// witness may differ, the value may not).
SolveResult branch_and_bound_optimal(const Game& game, const SolveOptions& options = {});

struct UtilDecision {
  bool satisfied = false;
  std::optional<JointStrategy> witness;  // present iff satisfied
  Rational witness_value;                // expected payoff of the witness
  std::uint64_t profiles_examined = 0;
  std::uint64_t nodes_pruned = 0;
};

/// Decides whether some pure joint strategy achieves expected payoff >= r.
/// Runs branch and bound with an early exit once the incumbent reaches r;
/// a false answer certifies itself by exhausting the search.
UtilDecision util_decide(const Game& game, const Rational& threshold,
                         const SolveOptions& options = {});

/// Fast path for perfect information: every positive-probability world gives
/// every player a distinct observation, so each world's payoff-maximizing
/// joint action (lexicographic tie-break) can be chosen independently.
/// Linear in the size of the payoff tables.  Throws PreconditionError when
/// an observation repeats across two positive-probability worlds.
SolveResult perfect_info_solve(const Game& game);

/// Dense matrix of expected payoffs for every pure joint strategy, indexed
/// row-major by per-player strategy rank under lexicographic enumeration.
/// Throws SizeCapError (carrying the computed dimensions) above the cap.
NormalForm to_normal_form(const Game& game, const NormalFormOptions& options = {});

}  // namespace cpgame
