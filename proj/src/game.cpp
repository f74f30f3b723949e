#include "cpgame/game.hpp"

#include <algorithm>
#include <unordered_set>

#include "cpgame/errors.hpp"

namespace cpgame {

namespace {

std::unordered_map<std::string, int> build_lookup(const std::vector<std::string>& ids) {
  std::unordered_map<std::string, int> lookup;
  lookup.reserve(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    lookup.emplace(ids[k], static_cast<int>(k));  // first declaration wins on duplicates
  }
  return lookup;
}

}  // namespace

Game::Game(std::vector<std::vector<std::string>> actions,
           std::vector<std::vector<std::string>> observations, std::vector<World> worlds)
    : actions_(std::move(actions)),
      observations_(std::move(observations)),
      worlds_(std::move(worlds)) {
  if (actions_.empty() || actions_.size() != observations_.size()) {
    throw ValidationError("game needs matching non-empty action and observation lists, one per player");
  }
  const int n = player_count();

  strides_.assign(n, 1);
  joint_action_count_ = 1;
  for (int i = n - 1; i >= 0; --i) {
    strides_[i] = joint_action_count_;
    joint_action_count_ *= actions_[i].size();
  }

  action_lookup_.reserve(n);
  observation_lookup_.reserve(n);
  for (int i = 0; i < n; ++i) {
    action_lookup_.push_back(build_lookup(actions_[i]));
    observation_lookup_.push_back(build_lookup(observations_[i]));
  }

  world_obs_.reserve(worlds_.size());
  evaluable_ = true;
  for (std::size_t w = 0; w < worlds_.size(); ++w) {
    const World& world = worlds_[w];
    std::vector<int> obs(n, -1);
    for (int i = 0; i < n && i < static_cast<int>(world.observations.size()); ++i) {
      obs[i] = observation_index(i, world.observations[i]);
    }
    world_obs_.push_back(std::move(obs));

    if (evaluable_) {
      if (static_cast<int>(world.observations.size()) != n ||
          std::find(world_obs_[w].begin(), world_obs_[w].end(), -1) != world_obs_[w].end()) {
        evaluable_ = false;
        evaluable_issue_ = "world \"" + world.id + "\" has unresolved observations";
      } else if (world.payoffs.size() != joint_action_count_) {
        evaluable_ = false;
        evaluable_issue_ = "world \"" + world.id + "\" payoff table is not total over the joint action space";
      } else {
        for (const auto& entry : world.payoffs) {
          if (static_cast<int>(entry.size()) != n) {
            evaluable_ = false;
            evaluable_issue_ = "world \"" + world.id + "\" has a payoff entry without one value per player";
            break;
          }
        }
      }
    }
  }
}

int Game::action_index(int player, std::string_view id) const {
  const auto& lookup = action_lookup_.at(player);
  auto it = lookup.find(std::string(id));
  return it == lookup.end() ? -1 : it->second;
}

int Game::observation_index(int player, std::string_view id) const {
  const auto& lookup = observation_lookup_.at(player);
  auto it = lookup.find(std::string(id));
  return it == lookup.end() ? -1 : it->second;
}

std::size_t Game::joint_index(const std::vector<int>& action_per_player) const {
  std::size_t index = 0;
  for (int i = 0; i < player_count(); ++i) {
    index += static_cast<std::size_t>(action_per_player[i]) * strides_[i];
  }
  return index;
}

std::vector<int> Game::joint_tuple(std::size_t joint_index) const {
  std::vector<int> tuple(player_count());
  for (int i = 0; i < player_count(); ++i) {
    tuple[i] = static_cast<int>(joint_index / strides_[i] % actions_[i].size());
  }
  return tuple;
}

bool Game::common_payoff() const {
  for (const World& world : worlds_) {
    for (const auto& entry : world.payoffs) {
      for (std::size_t i = 1; i < entry.size(); ++i) {
        if (entry[i] != entry[0]) return false;
      }
    }
  }
  return true;
}

Integer Game::strategy_count(int player) const {
  Integer count = 1;
  const Integer base = actions_.at(player).size();
  for (std::size_t o = 0; o < observations_.at(player).size(); ++o) count *= base;
  return count;
}

Integer Game::profile_count() const {
  Integer count = 1;
  for (int i = 0; i < player_count(); ++i) count *= strategy_count(i);
  return count;
}

std::vector<std::string> Game::validate() const {
  std::vector<std::string> violations;
  const int n = player_count();

  auto check_identifiers = [&](const std::vector<std::string>& ids, const std::string& what,
                               int player) {
    if (ids.empty()) {
      violations.push_back("player " + std::to_string(player + 1) + " has an empty " + what + " set");
    }
    std::unordered_set<std::string> seen;
    for (const std::string& id : ids) {
      if (!seen.insert(id).second) {
        violations.push_back("player " + std::to_string(player + 1) + " declares duplicate " + what +
                             " \"" + id + "\"");
      }
      if (id.find('|') != std::string::npos) {
        violations.push_back("identifier \"" + id + "\" contains '|', which the game file format reserves");
      }
    }
  };
  for (int i = 0; i < n; ++i) {
    check_identifiers(actions_[i], "action", i);
    check_identifiers(observations_[i], "observation", i);
  }

  Rational total;
  std::unordered_set<std::string> world_ids;
  for (std::size_t w = 0; w < worlds_.size(); ++w) {
    const World& world = worlds_[w];
    if (!world_ids.insert(world.id).second) {
      violations.push_back("duplicate world id \"" + world.id + "\"");
    }
    if (world.probability.sign() < 0) {
      violations.push_back("world \"" + world.id + "\" has negative probability " +
                           world.probability.str());
    }
    total += world.probability;

    if (static_cast<int>(world.observations.size()) != n) {
      violations.push_back("world \"" + world.id + "\" lists " +
                           std::to_string(world.observations.size()) + " observations for " +
                           std::to_string(n) + " players");
    } else {
      for (int i = 0; i < n; ++i) {
        if (world_obs_[w][i] < 0) {
          violations.push_back("world \"" + world.id + "\" observation \"" + world.observations[i] +
                               "\" is not in player " + std::to_string(i + 1) + "'s observation set");
        }
      }
    }

    if (world.payoffs.size() != joint_action_count_) {
      violations.push_back("world \"" + world.id + "\" payoff table has " +
                           std::to_string(world.payoffs.size()) + " entries, expected " +
                           std::to_string(joint_action_count_));
    }
    for (const auto& entry : world.payoffs) {
      if (static_cast<int>(entry.size()) != n) {
        violations.push_back("world \"" + world.id + "\" has a payoff entry with " +
                             std::to_string(entry.size()) + " values for " + std::to_string(n) +
                             " players");
        break;
      }
    }
  }
  if (total != Rational(1)) {
    violations.push_back("world probabilities sum to " + total.str() + " != 1");
  }

  return violations;
}

void Game::require_evaluable() const {
  if (!evaluable_) throw ValidationError(evaluable_issue_);
}

void check_profile(const Game& game, const JointStrategy& js) {
  const int n = game.player_count();
  if (static_cast<int>(js.per_player.size()) != n) {
    throw ValidationError("joint strategy has " + std::to_string(js.per_player.size()) +
                          " strategies for " + std::to_string(n) + " players");
  }
  for (int i = 0; i < n; ++i) {
    const Strategy& s = js.per_player[i];
    if (s.player != i) {
      throw ValidationError("strategy at position " + std::to_string(i) + " is for player " +
                            std::to_string(s.player + 1));
    }
    if (s.choice.size() != game.observations(i).size()) {
      throw ValidationError("player " + std::to_string(i + 1) + " strategy covers " +
                            std::to_string(s.choice.size()) + " observations, expected " +
                            std::to_string(game.observations(i).size()));
    }
    for (int action : s.choice) {
      if (action < 0 || action >= static_cast<int>(game.actions(i).size())) {
        throw ValidationError("player " + std::to_string(i + 1) + " strategy uses action index " +
                              std::to_string(action) + " outside its action set");
      }
    }
  }
}

void check_mixed_profile(const Game& game, const MixedJointStrategy& mjs) {
  const int n = game.player_count();
  if (static_cast<int>(mjs.per_player.size()) != n) {
    throw ValidationError("mixed joint strategy has " + std::to_string(mjs.per_player.size()) +
                          " distributions for " + std::to_string(n) + " players");
  }
  for (int i = 0; i < n; ++i) {
    const MixedStrategy& mix = mjs.per_player[i];
    if (mix.player != i) {
      throw ValidationError("mixture at position " + std::to_string(i) + " is for player " +
                            std::to_string(mix.player + 1));
    }
    if (mix.support.empty()) {
      throw ValidationError("player " + std::to_string(i + 1) + " has an empty mixture");
    }
    Rational total;
    for (const WeightedStrategy& ws : mix.support) {
      if (ws.weight.sign() < 0) {
        throw ValidationError("player " + std::to_string(i + 1) + " has a negative mixture weight");
      }
      if (ws.strategy.player != i || ws.strategy.choice.size() != game.observations(i).size()) {
        throw ValidationError("player " + std::to_string(i + 1) +
                              " mixture contains a strategy that does not fit the game");
      }
      for (int action : ws.strategy.choice) {
        if (action < 0 || action >= static_cast<int>(game.actions(i).size())) {
          throw ValidationError("player " + std::to_string(i + 1) +
                                " mixture uses an action index outside its action set");
        }
      }
      total += ws.weight;
    }
    if (total != Rational(1)) {
      throw ValidationError("player " + std::to_string(i + 1) + " mixture weights sum to " +
                            total.str() + " != 1");
    }
  }
}

}  // namespace cpgame
