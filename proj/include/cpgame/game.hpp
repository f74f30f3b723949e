#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cpgame/rational.hpp"

namespace cpgame {

/// One move by nature: the players' observations and the payoff table over
/// the joint action space.  Payoff entries hold one value per player; in a
/// common-payoff game all components of an entry are equal.
struct World {
  std::string id;
  Rational probability;
  std::vector<std::string> observations;          // one identifier per player
  std::vector<std::vector<Rational>> payoffs;     // [joint action index][player]
};

/// Deterministic strategy of one player: an action index for every
/// observation index, total over that player's observation set.
struct Strategy {
  int player = 0;
  std::vector<int> choice;  // choice[observation index] = action index
};

struct JointStrategy {
  std::vector<Strategy> per_player;  // entry i has player == i
};

struct WeightedStrategy {
  Strategy strategy;
  Rational weight;
};

/// Independent per-player mixtures over pure strategies.  Each player's
/// weights must be non-negative and sum to exactly 1.
struct MixedStrategy {
  int player = 0;
  std::vector<WeightedStrategy> support;
};

struct MixedJointStrategy {
  std::vector<MixedStrategy> per_player;
};

/// A finite game in which nature moves once and each player then moves once
/// on the strength of a single observation.  Immutable after construction;
/// all member functions are const and safe to call concurrently.
///
/// Joint actions are indexed row-major with player 0 most significant, so
/// ascending index order is lexicographic order over action tuples.
class Game {
public:
  Game(std::vector<std::vector<std::string>> actions,
       std::vector<std::vector<std::string>> observations,
       std::vector<World> worlds);

  int player_count() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::vector<std::string>>& actions() const { return actions_; }
  const std::vector<std::string>& actions(int player) const { return actions_.at(player); }
  const std::vector<std::vector<std::string>>& observations() const { return observations_; }
  const std::vector<std::string>& observations(int player) const {
    return observations_.at(player);
  }
  const std::vector<World>& worlds() const { return worlds_; }

  /// ∏ |A_i|; 0 if some player has no actions.
  std::size_t joint_action_count() const { return joint_action_count_; }

  /// -1 when the identifier is not declared for that player.
  int action_index(int player, std::string_view id) const;
  int observation_index(int player, std::string_view id) const;

  /// Cached observation index of `player` in world `world`; -1 when the
  /// world names an observation outside that player's set.
  int world_observation(std::size_t world, int player) const {
    return world_obs_[world][player];
  }

  std::size_t joint_index(const std::vector<int>& action_per_player) const;
  std::vector<int> joint_tuple(std::size_t joint_index) const;

  /// True when every payoff entry pays all players the same amount.
  bool common_payoff() const;

  /// Number of pure strategies of one player, |A_i|^|O_i|, exact.
  Integer strategy_count(int player) const;
  /// Number of pure joint strategies, ∏ strategy_count(i), exact.
  Integer profile_count() const;

  /// Every invariant violation found, one description per violation.
  /// An empty result means the game is valid.
  std::vector<std::string> validate() const;
  bool valid() const { return validate().empty(); }

  /// Cheap structural check used by the evaluation operations: observations
  /// resolvable, payoff tables total, entries sized to the player count.
  /// Throws ValidationError when the game cannot be evaluated.
  void require_evaluable() const;

private:
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::vector<std::string>> observations_;
  std::vector<World> worlds_;

  std::size_t joint_action_count_ = 0;
  std::vector<std::size_t> strides_;                // per player
  std::vector<std::vector<int>> world_obs_;         // [world][player]
  std::vector<std::unordered_map<std::string, int>> action_lookup_;
  std::vector<std::unordered_map<std::string, int>> observation_lookup_;
  bool evaluable_ = false;
  std::string evaluable_issue_;
};

/// Throws ValidationError unless `js` fits `game`: one strategy per player in
/// order, each total over that player's observations with in-range actions.
void check_profile(const Game& game, const JointStrategy& js);

/// Same fit check for a mixture: per-player supports of well-formed pure
/// strategies with non-negative weights summing to exactly 1.
void check_mixed_profile(const Game& game, const MixedJointStrategy& mjs);

}  // namespace cpgame
