#include "cpgame/evaluate.hpp"

#include "cpgame/errors.hpp"
#include "cpgame/solver.hpp"

namespace cpgame {

std::vector<Rational> expected_joint_payoff(const Game& game, const JointStrategy& js) {
  game.require_evaluable();
  check_profile(game, js);
  const int n = game.player_count();
  std::vector<Rational> totals(n);
  std::vector<int> actions(n);
  for (std::size_t w = 0; w < game.worlds().size(); ++w) {
    const World& world = game.worlds()[w];
    for (int i = 0; i < n; ++i) {
      actions[i] = js.per_player[i].choice[game.world_observation(w, i)];
    }
    const auto& entry = world.payoffs[game.joint_index(actions)];
    for (int i = 0; i < n; ++i) {
      totals[i] += world.probability * entry[i];
    }
  }
  return totals;
}

Rational expected_payoff(const Game& game, const JointStrategy& js) {
  if (!game.common_payoff()) {
    throw ValidationError("expected_payoff requires a common-payoff game");
  }
  game.require_evaluable();
  check_profile(game, js);
  const int n = game.player_count();
  Rational total;
  std::vector<int> actions(n);
  for (std::size_t w = 0; w < game.worlds().size(); ++w) {
    const World& world = game.worlds()[w];
    for (int i = 0; i < n; ++i) {
      actions[i] = js.per_player[i].choice[game.world_observation(w, i)];
    }
    total += world.probability * world.payoffs[game.joint_index(actions)][0];
  }
  return total;
}

Rational expected_payoff_mixed(const Game& game, const MixedJointStrategy& mjs) {
  if (!game.common_payoff()) {
    throw ValidationError("expected_payoff_mixed requires a common-payoff game");
  }
  game.require_evaluable();
  check_mixed_profile(game, mjs);
  const int n = game.player_count();

  Rational total;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Rational weight(1);
    JointStrategy pure;
    pure.per_player.reserve(n);
    for (int i = 0; i < n; ++i) {
      const WeightedStrategy& ws = mjs.per_player[i].support[pick[i]];
      weight *= ws.weight;
      pure.per_player.push_back(ws.strategy);
    }
    if (!weight.is_zero()) {
      total += weight * expected_payoff(game, pure);
    }
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++pick[i] < mjs.per_player[i].support.size()) break;
      pick[i] = 0;
    }
    if (i < 0) break;
  }
  return total;
}

Strategy best_response(const Game& game, const JointStrategy& js, int player) {
  game.require_evaluable();
  check_profile(game, js);
  if (player < 0 || player >= game.player_count()) {
    throw ValidationError("best_response: no player " + std::to_string(player + 1));
  }
  const int n = game.player_count();
  const auto obs_count = game.observations(player).size();
  const auto action_count = game.actions(player).size();

  // Worlds sharing an observation of `player` are exactly the ones its
  // choice there affects, so the argmax decomposes per observation.
  Strategy response{player, std::vector<int>(obs_count, 0)};
  std::vector<int> actions(n);
  for (std::size_t o = 0; o < obs_count; ++o) {
    int best_action = 0;
    Rational best_value;
    bool first = true;
    for (std::size_t a = 0; a < action_count; ++a) {
      Rational value;
      for (std::size_t w = 0; w < game.worlds().size(); ++w) {
        if (game.world_observation(w, player) != static_cast<int>(o)) continue;
        const World& world = game.worlds()[w];
        for (int i = 0; i < n; ++i) {
          actions[i] = js.per_player[i].choice[game.world_observation(w, i)];
        }
        actions[player] = static_cast<int>(a);
        value += world.probability * world.payoffs[game.joint_index(actions)][player];
      }
      if (first || value > best_value) {
        first = false;
        best_value = value;
        best_action = static_cast<int>(a);
      }
    }
    response.choice[o] = best_action;
  }
  return response;
}

bool is_nash(const Game& game, const JointStrategy& js) {
  game.require_evaluable();
  check_profile(game, js);
  const std::vector<Rational> current = expected_joint_payoff(game, js);
  for (int i = 0; i < game.player_count(); ++i) {
    JointStrategy deviated = js;
    deviated.per_player[i] = best_response(game, js, i);
    if (expected_joint_payoff(game, deviated)[i] > current[i]) return false;
  }
  return true;
}

bool is_pareto_optimal(const Game& game, const JointStrategy& js) {
  if (!game.common_payoff()) {
    throw ValidationError("is_pareto_optimal requires a common-payoff game");
  }
  return expected_payoff(game, js) == brute_force_optimal(game).optimal_value;
}

}  // namespace cpgame
